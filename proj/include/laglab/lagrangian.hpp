#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "laglab/error.hpp"
#include "laglab/polynomial.hpp"
#include "laglab/rgraph.hpp"
#include "laglab/simplex.hpp"
#include "laglab/weighting.hpp"

namespace laglab {

enum class Method { closed_form_2graph, symmetry_reduced, multistart_gradient, support_enumeration };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form_2graph: return "closed_form_2graph";
    case Method::symmetry_reduced: return "symmetry_reduced";
    case Method::multistart_gradient: return "multistart_gradient";
    case Method::support_enumeration: return "support_enumeration";
  }
  return "unknown";
}

struct SolverOptions {
  int starts = 32;
  int max_iterations = 10000;
  double step_tolerance = 1e-14;
  double value_tolerance = 1e-12;
  /// Stationarity residual allowed on a certified result.
  double kkt_tolerance = 1e-8;
  /// Values this close to the best are ties; ties prefer smaller supports.
  double tie_tolerance = 1e-9;
  /// Graphs with at most this many non-isolated vertices are cross-checked
  /// against support enumeration before being certified.
  int cross_check_max_vertices = 6;
  double cross_check_tolerance = 1e-8;
  /// Upper bound on faces visited by support enumeration.
  std::uint64_t face_budget = std::uint64_t{1} << 16;
  bool use_symmetry = true;
  /// Solve 2-graphs through their clique number instead of numerically.
  bool closed_form_2graph = false;
  std::uint64_t seed = 0xF2F2;
};

struct LagrangianResult {
  double value = 0.0;
  Weighting weighting;
  int support = 0;
  double kkt_residual = 0.0;
  Method method = Method::multistart_gradient;
  bool certified = false;
  /// False when a budget cut the computation short.
  bool complete = true;
  /// Support-enumeration value used for certification, when one was run.
  std::optional<double> cross_check_value;
};

/// Stationarity report for a weighting of G.
struct KktReport {
  /// max over supported i of |lambda(E_i, x) - r * value|
  double residual = 0.0;
  int support = 0;
  /// Every pair of supported vertices lies in a common edge.
  bool pairs_covered = true;
  std::vector<std::pair<int, int>> uncovered_pairs;
  bool left_compressed = false;
  /// For left-compressed G: max over supported i < j of
  /// |(x_i - x_j) lambda(E_ij, x) - lambda(E_{i\j}, x)|; zero otherwise.
  double shift_residual = 0.0;
};

inline KktReport kkt_check(const RGraph& g, std::span<const double> x, double value,
                           double threshold = Weighting::kSupportThreshold) {
  if (x.size() < static_cast<std::size_t>(g.order())) throw DimensionError("weighting shorter than n");
  KktReport report;
  const EdgePolynomial poly(g);
  std::vector<double> grad(static_cast<std::size_t>(g.order()));
  poly.gradient(x.first(static_cast<std::size_t>(g.order())), grad);
  std::vector<int> supported;
  for (int i = 1; i <= g.order(); ++i) {
    if (x[static_cast<std::size_t>(i - 1)] > threshold) {
      supported.push_back(i);
      report.residual = std::max(report.residual,
                                 std::abs(grad[static_cast<std::size_t>(i - 1)] - g.uniformity() * value));
    }
  }
  report.support = static_cast<int>(supported.size());
  report.left_compressed = is_left_compressed(g);
  for (std::size_t a = 0; a < supported.size(); ++a) {
    for (std::size_t b = a + 1; b < supported.size(); ++b) {
      const int i = supported[a];
      const int j = supported[b];
      const auto common = pair_link(g, i, j);
      if (common.empty()) {
        report.pairs_covered = false;
        report.uncovered_pairs.emplace_back(i, j);
      }
      if (report.left_compressed) {
        const double lhs = (x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]) *
                           family_value(common, x);
        const double rhs = family_value(difference_link(g, i, j), x);
        report.shift_residual = std::max(report.shift_residual, std::abs(lhs - rhs));
      }
    }
  }
  return report;
}

inline KktReport kkt_check(const RGraph& g, const Weighting& x, double value) {
  return kkt_check(g, x.values(), value);
}

/// Vertex classes of a left-compressed graph: consecutive vertices i, i+1
/// share a class when E_{i\(i+1)} is empty, which makes them interchangeable.
/// Classes are lists of 1-based vertices in increasing order.
inline std::vector<std::vector<int>> symmetry_classes(const RGraph& g) {
  if (!is_left_compressed(g)) throw RefusalError("symmetry_classes needs a left-compressed graph");
  std::vector<std::vector<int>> classes;
  for (int v = 1; v <= g.order(); ++v) {
    if (v > 1 && difference_link(g, v - 1, v).empty()) {
      classes.back().push_back(v);
    } else {
      classes.push_back({v});
    }
  }
  return classes;
}

/// Clique number by exhaustive branching over adjacency bitmasks (n <= 20),
/// for 2-graphs only. An edgeless graph on n >= 1 vertices has clique number 1.
inline int clique_number(const RGraph& g) {
  if (g.uniformity() != 2) throw UniformityError("clique_number needs a 2-graph");
  const int n = g.order();
  if (n > 20) throw RefusalError("exhaustive clique search is limited to n <= 20");
  if (n == 0) return 0;
  std::vector<std::uint32_t> adjacent(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adjacent[static_cast<std::size_t>(e[0] - 1)] |= 1U << (e[1] - 1);
    adjacent[static_cast<std::size_t>(e[1] - 1)] |= 1U << (e[0] - 1);
  }
  int best = 1;
  // Extend cliques by vertices above the current largest one.
  auto grow = [&](auto& self, std::uint32_t candidates, int size) -> void {
    best = std::max(best, size);
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, candidates & adjacent[static_cast<std::size_t>(v)], size + 1);
    }
  };
  grow(grow, n == 32 ? ~0U : (1U << n) - 1, 0);
  return best;
}

/// Motzkin-Straus value 1/2 (1 - 1/omega) for a 2-graph, with omega found by
/// exhaustive search. Independent of the numerical solver.
inline double lagrangian_2graph_oracle(const RGraph& g) {
  if (g.uniformity() != 2) throw UniformityError("the 2-graph oracle needs r = 2");
  if (g.order() > 20) throw RefusalError("the 2-graph oracle is limited to n <= 20");
  if (g.empty()) return 0.0;
  const int omega = clique_number(g);
  return 0.5 * (1.0 - 1.0 / omega);
}

namespace detail {

/// Maps class weights w (one per class) to vertex weights x, spreading each
/// class total evenly over its members. Vertices outside every class stay 0.
class ClassMap {
 public:
  ClassMap(int n, const std::vector<std::vector<int>>& classes) : n_(n), class_of_(static_cast<std::size_t>(n), -1) {
    for (const auto& members : classes) {
      const int c = static_cast<int>(sizes_.size());
      for (int v : members) class_of_[static_cast<std::size_t>(v - 1)] = c;
      sizes_.push_back(static_cast<double>(members.size()));
    }
  }

  int classes() const noexcept { return static_cast<int>(sizes_.size()); }
  int vertices() const noexcept { return n_; }

  void expand(std::span<const double> w, std::span<double> x) const {
    for (std::size_t v = 0; v < class_of_.size(); ++v) {
      const int c = class_of_[v];
      x[v] = c < 0 ? 0.0 : w[static_cast<std::size_t>(c)] / sizes_[static_cast<std::size_t>(c)];
    }
  }

  void pull_gradient(std::span<const double> gx, std::span<double> gw) const {
    std::fill(gw.begin(), gw.end(), 0.0);
    for (std::size_t v = 0; v < class_of_.size(); ++v) {
      const int c = class_of_[v];
      if (c >= 0) gw[static_cast<std::size_t>(c)] += gx[v] / sizes_[static_cast<std::size_t>(c)];
    }
  }

  /// Class weights of a vertex weighting (sums over members).
  std::vector<double> restrict(std::span<const double> x) const {
    std::vector<double> w(sizes_.size(), 0.0);
    for (std::size_t v = 0; v < class_of_.size(); ++v)
      if (class_of_[v] >= 0) w[static_cast<std::size_t>(class_of_[v])] += x[v];
    return w;
  }

 private:
  int n_;
  std::vector<int> class_of_;
  std::vector<double> sizes_;
};

/// Projected gradient ascent with Armijo backtracking over the class simplex
/// restricted to `free` classes. Returns the final value.
inline double ascend(const EdgePolynomial& poly, const ClassMap& map, std::vector<double>& w,
                     const std::vector<char>& free, const SolverOptions& opts) {
  const auto n = static_cast<std::size_t>(map.vertices());
  const auto k = static_cast<std::size_t>(map.classes());
  std::vector<double> x(n), gx(n), gw(k), trial(k);
  project_to_simplex(w, free);
  map.expand(w, x);
  double f = poly.value(x);
  double step = 1.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    poly.gradient(x, gx);
    map.pull_gradient(gx, gw);
    bool accepted = false;
    double f_trial = f;
    double moved = 0.0;
    for (int attempt = 0; attempt < 60; ++attempt) {
      for (std::size_t c = 0; c < k; ++c) trial[c] = w[c] + step * gw[c];
      project_to_simplex(trial, free);
      double slope = 0.0;
      moved = 0.0;
      for (std::size_t c = 0; c < k; ++c) {
        slope += gw[c] * (trial[c] - w[c]);
        moved = std::max(moved, std::abs(trial[c] - w[c]));
      }
      map.expand(trial, x);
      f_trial = poly.value(x);
      if (f_trial >= f + 1e-4 * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      map.expand(w, x);
      break;
    }
    const double gain = f_trial - f;
    w.swap(trial);
    f = f_trial;
    step = std::min(step * 2.0, 1e6);
    if (moved <= opts.step_tolerance || gain <= opts.value_tolerance * 1e-3) break;
  }
  return f;
}

inline std::vector<char> support_mask(std::span<const double> x, double threshold) {
  std::vector<char> mask(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) mask[i] = x[i] > threshold ? 1 : 0;
  return mask;
}

/// Newton iteration on the equal-link system
///   lambda(E_i, x) = mu for i in the support,  sum x = 1
/// keeping every supported weight positive. Reverts if the value drops.
inline void newton_polish(const EdgePolynomial& poly, std::vector<double>& x, double threshold) {
  const auto n = x.size();
  double total = 0.0;
  for (double& v : x) {
    if (v <= threshold) v = 0.0;
    total += v;
  }
  if (total <= 0.0) return;
  for (double& v : x) v /= total;

  std::vector<int> s;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > 0.0) s.push_back(static_cast<int>(i));
  const auto k = static_cast<Eigen::Index>(s.size());
  if (k <= 1) return;

  const std::vector<double> start = x;
  const double start_value = poly.value(x);
  std::vector<double> grad(n), trial(n);

  auto residual = [&](std::span<const double> at, double mu, Eigen::VectorXd& out) {
    poly.gradient(at, grad);
    double sum = 0.0;
    for (Eigen::Index a = 0; a < k; ++a) {
      out(a) = grad[static_cast<std::size_t>(s[static_cast<std::size_t>(a)])] - mu;
      sum += at[static_cast<std::size_t>(s[static_cast<std::size_t>(a)])];
    }
    out(k) = sum - 1.0;
    return out.norm();
  };

  poly.gradient(x, grad);
  double mu = 0.0;
  for (int i : s) mu += x[static_cast<std::size_t>(i)] * grad[static_cast<std::size_t>(i)];

  Eigen::VectorXd f(k + 1), f_trial(k + 1);
  double norm = residual(x, mu, f);
  for (int it = 0; it < 30 && norm > 1e-16; ++it) {
    const Eigen::MatrixXd h = poly.hessian(x);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) jac(a, b) = h(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
      jac(a, k) = -1.0;
      jac(k, a) = 1.0;
    }
    const Eigen::VectorXd d = jac.completeOrthogonalDecomposition().solve(-f);
    if (!d.allFinite()) break;
    bool accepted = false;
    for (double alpha = 1.0; alpha > 1e-6; alpha *= 0.5) {
      trial = x;
      bool positive = true;
      for (Eigen::Index a = 0; a < k; ++a) {
        double& v = trial[static_cast<std::size_t>(s[static_cast<std::size_t>(a)])];
        v += alpha * d(a);
        if (!(v > 0.0)) positive = false;
      }
      if (!positive) continue;
      const double mu_trial = mu + alpha * d(k);
      const double norm_trial = residual(trial, mu_trial, f_trial);
      if (norm_trial < (1.0 - 1e-4 * alpha) * norm) {
        x.swap(trial);
        mu = mu_trial;
        norm = norm_trial;
        f = f_trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  // Renormalise away the last rounding in the sum constraint.
  total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  if (poly.value(x) < start_value - 1e-14) x = start;
}

/// Moving weight between two supported vertices that share no edge changes
/// the value linearly; shift it toward the larger link value until every
/// supported pair is covered.
inline void merge_uncovered_pairs(const RGraph& g, const EdgePolynomial& poly, std::vector<double>& x,
                                  double threshold) {
  const auto n = x.size();
  std::vector<double> grad(n);
  bool changed = true;
  while (changed) {
    changed = false;
    poly.gradient(x, grad);
    for (std::size_t i = 0; i < n && !changed; ++i) {
      if (x[i] <= threshold) continue;
      for (std::size_t j = i + 1; j < n && !changed; ++j) {
        if (x[j] <= threshold) continue;
        if (!pair_link(g, static_cast<int>(i) + 1, static_cast<int>(j) + 1).empty()) continue;
        const auto [to, from] = grad[i] >= grad[j] ? std::pair{i, j} : std::pair{j, i};
        x[to] += x[from];
        x[from] = 0.0;
        changed = true;
      }
    }
  }
}

struct Candidate {
  double value;
  std::vector<double> x;
  int support;
};

inline int count_support(std::span<const double> x, double threshold) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [threshold](double v) { return v > threshold; }));
}

/// Strict preference: clearly larger value, then (among ties) smaller
/// support, then lexicographically larger weighting.
inline bool better(const Candidate& a, const Candidate& b, double tie) {
  if (a.value > b.value + tie) return true;
  if (b.value > a.value + tie) return false;
  if (a.support != b.support) return a.support < b.support;
  return std::lexicographical_compare(b.x.begin(), b.x.end(), a.x.begin(), a.x.end());
}

inline std::vector<std::vector<int>> active_singletons(const RGraph& g) {
  const auto active = g.active_vertices();
  std::vector<std::vector<int>> classes;
  for (int v = 1; v <= g.order(); ++v)
    if (active[static_cast<std::size_t>(v)]) classes.push_back({v});
  return classes;
}

/// Local solve on a face: ascent from `x0` restricted to `free` vertices,
/// then Newton polish on the resulting support.
inline Candidate solve_on_face(const EdgePolynomial& poly, const ClassMap& identity, std::vector<double> x0,
                               const std::vector<char>& free, const SolverOptions& opts) {
  ascend(poly, identity, x0, free, opts);
  newton_polish(poly, x0, Weighting::kSupportThreshold);
  const double value = poly.value(x0);
  const int support = count_support(x0, Weighting::kSupportThreshold);
  return {value, std::move(x0), support};
}

inline LagrangianResult finish(const RGraph& g, std::vector<double> x, Method method, const SolverOptions& opts) {
  for (double& v : x)
    if (v <= Weighting::kSupportThreshold) v = 0.0;
  double total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  LagrangianResult result;
  result.value = evaluate(g, x);
  const KktReport kkt = kkt_check(g, x, result.value);
  result.kkt_residual = kkt.residual;
  result.support = kkt.support;
  result.weighting = Weighting(std::move(x));
  result.method = method;
  result.certified = result.kkt_residual <= opts.kkt_tolerance;
  return result;
}

inline LagrangianResult empty_result(const RGraph& g) {
  LagrangianResult result;
  result.weighting = Weighting::uniform(g.order());
  result.certified = true;
  return result;
}

}  // namespace detail

/// Lagrangian by face enumeration: every vertex subset S of the non-isolated
/// vertices with |S| <= max_support is visited in order of size, the
/// polynomial is maximised on the face spanned by S from its barycentre and
/// from points leaning toward each vertex, and the best point is kept.
/// Ties within opts.tie_tolerance keep the smaller support. Deterministic.
inline LagrangianResult support_enumeration(const RGraph& g, int max_support, const SolverOptions& opts = {}) {
  if (g.empty()) {
    auto result = detail::empty_result(g);
    result.method = Method::support_enumeration;
    return result;
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> active;
  {
    const auto flags = g.active_vertices();
    for (int v = 1; v <= g.order(); ++v)
      if (flags[static_cast<std::size_t>(v)]) active.push_back(v);
  }
  if (active.size() > 62) throw RefusalError("support enumeration over more than 62 vertices");
  const int limit = std::min<int>(max_support, static_cast<int>(active.size()));

  const EdgePolynomial poly(g);
  std::vector<std::vector<int>> singletons;
  for (int v = 1; v <= g.order(); ++v) singletons.push_back({v});
  const detail::ClassMap identity(g.order(), singletons);

  std::optional<detail::Candidate> best;
  std::uint64_t visited = 0;
  bool complete = true;

  std::vector<int> chosen;
  // Subsets of `active` of size `size`, in lexicographic order.
  auto visit_size = [&](auto& self, int size, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == size) {
      if (visited++ >= opts.face_budget) return false;
      std::vector<char> free(n, 0);
      for (int v : chosen) free[static_cast<std::size_t>(v - 1)] = 1;
      bool has_edge = false;
      for (const Edge& e : g.edges()) {
        if (std::all_of(e.begin(), e.end(), [&](int v) { return free[static_cast<std::size_t>(v - 1)] != 0; })) {
          has_edge = true;
          break;
        }
      }
      if (!has_edge) return true;
      const double share = 1.0 / size;
      std::vector<std::vector<double>> starts;
      std::vector<double> bary(n, 0.0);
      for (int v : chosen) bary[static_cast<std::size_t>(v - 1)] = share;
      starts.push_back(bary);
      if (size > 1) {
        for (int v : chosen) {
          std::vector<double> lean = bary;
          for (double& w : lean) w *= 0.5;
          lean[static_cast<std::size_t>(v - 1)] += 0.5;
          starts.push_back(std::move(lean));
        }
      }
      for (auto& x0 : starts) {
        detail::Candidate c = detail::solve_on_face(poly, identity, std::move(x0), free, opts);
        if (!best || detail::better(c, *best, opts.tie_tolerance)) best = std::move(c);
      }
      return true;
    }
    for (std::size_t idx = from; idx < active.size(); ++idx) {
      chosen.push_back(active[idx]);
      const bool go_on = self(self, size, idx + 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  for (int size = 1; size <= limit && complete; ++size) {
    if (!visit_size(visit_size, size, 0)) complete = false;
  }
  if (limit < static_cast<int>(active.size())) complete = false;

  if (!best) {
    auto result = detail::empty_result(g);
    result.method = Method::support_enumeration;
    result.complete = complete;
    result.certified = complete;
    return result;
  }
  LagrangianResult result = detail::finish(g, best->x, Method::support_enumeration, opts);
  result.complete = complete;
  result.certified = result.certified && complete;
  return result;
}

/// lambda(G) with an optimal weighting.
///
/// Multi-start projected gradient ascent (uniform start, one start per
/// vertex neighbourhood, the rest flat-Dirichlet) over class weights, where
/// classes are the interchangeable-vertex classes of a left-compressed graph
/// and singletons otherwise. Every start is polished by Newton's method on the
/// equal-link system. The preferred candidate (largest value; ties resolved
/// toward smaller support, then the lexicographically largest weighting) is
/// then reduced to a minimal support and, for left-compressed graphs, sorted
/// to be non-increasing. Small graphs are cross-checked by support_enumeration.
inline LagrangianResult lagrangian(const RGraph& g, const SolverOptions& opts = {}) {
  if (g.empty()) return detail::empty_result(g);
  const auto n = static_cast<std::size_t>(g.order());
  const EdgePolynomial poly(g);
  const std::vector<bool> active_flags = g.active_vertices();
  const int active_count =
      static_cast<int>(std::count(active_flags.begin() + 1, active_flags.end(), true));

  if (opts.closed_form_2graph && g.uniformity() == 2 && g.order() <= 20) {
    // Uniform weight on a maximum clique.
    const int omega = clique_number(g);
    std::vector<int> clique;
    auto find = [&](auto& self, int v) -> bool {
      if (static_cast<int>(clique.size()) == omega) return true;
      for (int u = v; u <= g.order(); ++u) {
        bool ok = true;
        for (int w : clique) ok = ok && g.contains(Edge{w, u});
        if (!ok) continue;
        clique.push_back(u);
        if (self(self, u + 1)) return true;
        clique.pop_back();
      }
      return false;
    };
    find(find, 1);
    std::vector<double> x(n, 0.0);
    for (int v : clique) x[static_cast<std::size_t>(v - 1)] = 1.0 / omega;
    LagrangianResult result = detail::finish(g, std::move(x), Method::closed_form_2graph, opts);
    result.value = lagrangian_2graph_oracle(g);
    result.certified = true;
    return result;
  }

  const bool compressed = is_left_compressed(g);
  std::vector<std::vector<int>> classes;
  Method method = Method::multistart_gradient;
  if (compressed && opts.use_symmetry) {
    for (auto& members : symmetry_classes(g)) {
      if (active_flags[static_cast<std::size_t>(members.front())]) classes.push_back(std::move(members));
    }
    if (static_cast<int>(classes.size()) < active_count) method = Method::symmetry_reduced;
  } else {
    classes = detail::active_singletons(g);
  }
  const detail::ClassMap map(g.order(), classes);
  const auto k = static_cast<std::size_t>(map.classes());
  const std::vector<char> all_classes(k, 1);

  // Starting points in class space.
  std::vector<std::vector<double>> starts;
  starts.emplace_back(k, 1.0 / static_cast<double>(k));
  for (std::size_t c = 0; c < k && static_cast<int>(starts.size()) < opts.starts; ++c) {
    const int v = classes[c].front();
    std::vector<double> x(n, 0.0);
    x[static_cast<std::size_t>(v - 1)] = 1.0;
    for (const Edge& e : g.edges()) {
      if (!e.contains(v)) continue;
      for (int u : e) x[static_cast<std::size_t>(u - 1)] = 1.0;
    }
    starts.push_back(map.restrict(x));
  }
  SplitMix64 rng(opts.seed ^ (g.canonical_hash() * 0x9e3779b97f4a7c15ULL));
  while (static_cast<int>(starts.size()) < opts.starts) starts.push_back(rng.dirichlet(all_classes));

  std::optional<detail::Candidate> best;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> x(n);
  for (auto& w : starts) {
    detail::ascend(poly, map, w, all_classes, opts);
    map.expand(w, x);
    std::vector<double> polished = x;
    detail::newton_polish(poly, polished, Weighting::kSupportThreshold);
    detail::Candidate c{poly.value(polished), polished, detail::count_support(polished, Weighting::kSupportThreshold)};
    best_value = std::max(best_value, c.value);
    if (!best || detail::better(c, *best, opts.tie_tolerance)) best = std::move(c);
  }

  // Minimal support: merge vertex pairs that share no edge, then try to drop
  // each supported vertex while staying within the tie tolerance of the best.
  std::vector<double> current = best->x;
  detail::merge_uncovered_pairs(g, poly, current, Weighting::kSupportThreshold);
  detail::newton_polish(poly, current, Weighting::kSupportThreshold);
  std::vector<std::vector<int>> singletons;
  for (int v = 1; v <= g.order(); ++v) singletons.push_back({v});
  const detail::ClassMap identity(g.order(), singletons);
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
      if (current[i] > Weighting::kSupportThreshold) order.push_back(i);
    if (order.size() <= 1) break;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return current[a] < current[b]; });
    for (std::size_t drop : order) {
      std::vector<char> free = detail::support_mask(current, Weighting::kSupportThreshold);
      free[drop] = 0;
      std::vector<double> x0 = current;
      x0[drop] = 0.0;
      detail::Candidate c = detail::solve_on_face(poly, identity, std::move(x0), free, opts);
      if (c.value >= best_value - opts.tie_tolerance) {
        current = std::move(c.x);
        shrunk = true;
        break;
      }
    }
  }

  if (compressed) {
    // Shifting weight toward smaller labels never lowers the value here.
    std::sort(current.begin(), current.end(), std::greater<>());
    detail::newton_polish(poly, current, Weighting::kSupportThreshold);
  }

  LagrangianResult result = detail::finish(g, std::move(current), method, opts);
  result.certified = result.certified && result.value >= best_value - opts.tie_tolerance;

  if (active_count <= opts.cross_check_max_vertices) {
    const LagrangianResult check = support_enumeration(g, active_count, opts);
    result.cross_check_value = check.value;
    if (check.value > result.value + opts.cross_check_tolerance) {
      // The multistart missed the optimum; report the better point uncertified.
      LagrangianResult adopted = check;
      adopted.cross_check_value = check.value;
      adopted.certified = false;
      return adopted;
    }
    result.certified = result.certified && check.complete &&
                       std::abs(check.value - result.value) <= opts.cross_check_tolerance;
  }
  return result;
}

}  // namespace laglab
