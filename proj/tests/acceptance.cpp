// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "laglab/laglab.hpp"
#include "oracles.hpp"

using namespace laglab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  fmt::print("{} {} {:<44} {:8.2f}s  {}\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail);
  std::fflush(stdout);
}

std::string capture(const std::string& args) {
  const std::string cmd = "\"" LAGLAB_CLI "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  if (pclose(pipe) != 0) throw std::runtime_error("non-zero exit from " + cmd);
  return out;
}

VerifyOptions parallel_opts() {
  VerifyOptions v;
  v.workers = default_workers();
  return v;
}

}  // namespace

int main() {
  std::vector<VerificationReport> sweep6;

  criterion("AC1", "2-graph values match clique number", [] {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> density(0.1, 0.95);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const RGraph g = oracle::random_graph(rng, 2, order(rng), density(rng));
      const int w = oracle::brute_clique_number(g);
      const double expected = w == 0 ? 0.0 : 0.5 * (1.0 - 1.0 / w);
      const double err = std::abs(lagrangian(g).value - expected);
      worst = std::max(worst, err);
      if (err > 1e-7) o.fail(fmt::format("graph {} n={} off by {:.3g}", k, g.order(), err));
    }
    if (o.pass) o.detail = fmt::format("200 graphs, max error {:.3g}", worst);
    return o;
  });

  criterion("AC2", "complete 3-graphs give C(t,3)/t^3", [] {
    Outcome o;
    for (int t = 3; t <= 8; ++t) {
      const RGraph g = complete_graph(3, t);
      const double expected = static_cast<double>(choose(t, 3)) / (t * t * t);
      const double value = lagrangian(g).value;
      if (std::abs(value - expected) > 1e-8) o.fail(fmt::format("t={} value {}", t, value));
      // The grid contains the uniform point only when t divides 60, so it may
      // fall short of the optimum but never exceed it.
      if (t <= 5) {
        const double grid = oracle::grid_max(g, 60);
        if (grid > expected + 1e-12) o.fail(fmt::format("t={} grid beats uniform: {}", t, grid));
        if (60 % t == 0 && std::abs(grid - expected) > 1e-12) o.fail(fmt::format("t={} grid {}", t, grid));
      }
    }
    if (o.pass) o.detail = "t = 3..8, grid 1/60 for t <= 5";
    return o;
  });

  criterion("AC3", "colex plateau equals lambda([t-1])", [] {
    Outcome o;
    for (int t = 5; t <= 7; ++t) {
      const double target = static_cast<double>(choose(t - 1, 3)) / std::pow(t - 1, 3);
      const auto lo = choose(t - 1, 3);
      const auto hi = lo + choose(t - 2, 2);
      for (auto m = lo; m <= hi; ++m) {
        const double v = lagrangian(build_colex_graph(3, m)).value;
        if (std::abs(v - target) > 1e-7) o.fail(fmt::format("t={} m={} value {}", t, m, v));
      }
    }
    if (o.pass) o.detail = "t = 5, 6, 7";
    return o;
  });

  criterion("AC4", "sweep --t-max 6 passes with colex a witness", [&] {
    Outcome o;
    sweep6 = sweep(6, parallel_opts());
    for (const auto& r : sweep6) {
      if (!r.complete || !r.certified) o.fail(fmt::format("t={} m={} not complete/certified", r.t, r.m));
      if (r.gap < -1e-7) o.fail(fmt::format("t={} m={} gap {}", r.t, r.m, r.gap));
      if (!r.colex_is_witness) o.fail(fmt::format("t={} m={} colex not a witness", r.t, r.m));
    }
    if (o.pass) o.detail = fmt::format("{} cells", sweep6.size());
    return o;
  });

  {
    // Stretch goal for AC4; reported but not gating.
    const auto start = std::chrono::steady_clock::now();
    const auto seven = sweep(7, parallel_opts());
    const bool ok = std::all_of(seven.begin(), seven.end(),
                                [](const auto& r) { return r.all_pass && r.colex_is_witness; });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("{} AC4 {:<44} {:8.2f}s  {} cells (not gating)\n", ok ? "PASS" : "WARN", "stretch: sweep --t-max 7", secs,
               seven.size());
  }

  criterion("AC5", "configuration families satisfy the inequality", [] {
    Outcome o;
    std::size_t count = 0;
    for (int t : {7, 8, 9})
      for (const ConfigurationSpec& spec : all_configurations(t)) {
        ++count;
        const InequalityReport r = check_theorem_inequality(spec);
        if (r.verdict != Verdict::pass)
          o.fail(fmt::format("{} {} margin {}", describe(spec), to_string(r.verdict), r.margin));
      }
    if (o.pass) o.detail = fmt::format("{} instances at t = 7, 8, 9", count);
    return o;
  });

  criterion("AC6", "structural invariants", [&] {
    Outcome o;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> order(4, 7);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    std::bernoulli_distribution drop(0.3);
    for (int k = 0; k < 500; ++k) {
      const RGraph g = oracle::random_graph(rng, 3, order(rng), density(rng));
      std::vector<Edge> kept;
      for (const Edge& e : g.edges())
        if (!drop(rng)) kept.push_back(e);
      const RGraph h(3, g.order(), kept);
      const double lg = lagrangian(g).value;
      const double lh = lagrangian(h).value;
      if (lh > lg + 1e-9) o.fail(fmt::format("pair {}: sub {} > super {}", k, lh, lg));
    }

    std::size_t solves = 0;
    for (const auto& r : sweep6) {
      for (const GraphRecord& rec : r.graphs) {
        if (!rec.result.certified) continue;
        ++solves;
        if (rec.kkt.shift_residual > 1e-8)
          o.fail(fmt::format("t={} m={} shift residual {}", r.t, r.m, rec.kkt.shift_residual));
        if (!rec.monotone) o.fail(fmt::format("t={} m={} weights not monotone", r.t, r.m));
      }
      if (const CheckResult c = check_support_bound(r); !c.pass)
        o.fail(fmt::format("t={} m={} support bound: {}", r.t, r.m, c.detail));
      for (std::size_t w : r.witnesses)
        if (r.graphs[w].result.support > r.t) o.fail(fmt::format("t={} m={} support > t", r.t, r.m));
    }

    std::size_t plateau_cells = 0;
    for (const auto& r : sweep6) {
      if (r.t < 5) continue;
      const CheckResult c = check_delta_bound(r);
      if (!c.applicable) continue;
      ++plateau_cells;
      if (!c.pass) o.fail(fmt::format("t={} m={} delta: {}", r.t, r.m, c.detail));
    }
    if (o.pass)
      o.detail = fmt::format("500 pairs, {} certified solves, {} delta cells", solves, plateau_cells);
    return o;
  });

  criterion("AC7", "enumeration matches the filter oracle", [] {
    Outcome o;
    std::size_t cells = 0;
    for (int t = 1; t <= 5; ++t)
      for (int m = 0; m <= choose(t, 3); ++m) {
        ++cells;
        const auto got = count_left_compressed(t, m);
        const auto want = oracle::filtered_count(t, m);
        if (got != want) o.fail(fmt::format("t={} m={}: {} vs {}", t, m, got, want));
      }
    if (o.pass) o.detail = fmt::format("{} (t, m) pairs", cells);
    return o;
  });

  criterion("AC8", "sweep JSON independent of worker count", [] {
    Outcome o;
    const std::string one = capture("sweep --t-max 5 --workers 1");
    const std::string eight = capture("sweep --t-max 5 --workers 8");
    if (one != eight) o.fail("outputs differ");
    if (one.empty()) o.fail("empty output");
    if (o.pass) o.detail = fmt::format("{} bytes identical", one.size());
    return o;
  });

  fmt::print("{} of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
