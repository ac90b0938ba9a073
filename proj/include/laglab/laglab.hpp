#pragma once

#include "laglab/builtin_spec.hpp"
#include "laglab/colex.hpp"
#include "laglab/configurations.hpp"
#include "laglab/edge_list_io.hpp"
#include "laglab/error.hpp"
#include "laglab/lagrangian.hpp"
#include "laglab/parallel.hpp"
#include "laglab/polynomial.hpp"
#include "laglab/poset.hpp"
#include "laglab/report.hpp"
#include "laglab/rgraph.hpp"
#include "laglab/simplex.hpp"
#include "laglab/verifier.hpp"
#include "laglab/weighting.hpp"
