#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laglab/colex.hpp"
#include "laglab/configurations.hpp"
#include "laglab/error.hpp"
#include "laglab/lagrangian.hpp"
#include "laglab/parallel.hpp"
#include "laglab/poset.hpp"
#include "laglab/rgraph.hpp"

namespace laglab {

struct VerifyOptions {
  SolverOptions solver;
  int workers = 1;
  /// Cells with more left-compressed graphs than this are cut short.
  std::uint64_t graph_budget = 1'000'000;
  /// A cell passes when colex_value - max_value >= -pass_tolerance.
  double pass_tolerance = 1e-7;
  /// Graphs within this of max_value are witnesses.
  double witness_tolerance = 1e-9;
};

/// One enumerated graph of a cell and what the solver found for it.
struct GraphRecord {
  RGraph graph;
  LagrangianResult result;
  /// |E(G) symmetric-difference E(C_{3,m})|
  std::size_t delta = 0;
  /// |E_{(t-1)t}|, the number of edges through the pair {t-1, t}.
  int top_pair_degree = 0;
  KktReport kkt;
  /// Weights are non-increasing in the vertex label.
  bool monotone = true;
};

struct VerificationReport {
  int t = 0;
  int m = 0;
  /// C(t,3) - m
  int a = 0;
  double colex_value = 0.0;
  double max_value = 0.0;
  /// colex_value - max_value
  double gap = 0.0;
  std::uint64_t graph_count = 0;
  /// Indices into `graphs` of the graphs within witness tolerance of max_value.
  std::vector<std::size_t> witnesses;
  bool colex_enumerated = false;
  bool colex_is_witness = false;
  bool certified = true;
  bool complete = true;
  bool all_pass = false;
  std::vector<GraphRecord> graphs;

  std::vector<RGraph> witness_graphs() const {
    std::vector<RGraph> out;
    for (std::size_t w : witnesses) out.push_back(graphs[w].graph);
    return out;
  }
};

/// The (t, m) cells: C(t-1,3) <= m <= C(t,3) for one t.
inline std::vector<int> cell_window(int t) {
  if (t < 4) throw RefusalError("cells need t >= 4 (the vertex bound argument fails below 4)");
  std::vector<int> out;
  for (auto m = choose(t - 1, 3); m <= choose(t, 3); ++m) out.push_back(static_cast<int>(m));
  return out;
}

/// C_{3,m} placed on [t].
inline RGraph colex_on(int t, int m) {
  return build_colex_graph(3, static_cast<std::uint64_t>(m)).with_order(t);
}

inline bool non_increasing(std::span<const double> x, double tol = 1e-9) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] > x[i - 1] + tol) return false;
  return true;
}

/// Enumerates every left-compressed 3-graph on [t] with m edges, solves each
/// and reports the maximum against lambda(C_{3,m}).
inline VerificationReport verify_cell(int t, int m, const VerifyOptions& opts = {}) {
  if (t < 4) throw RefusalError("verify_cell needs t >= 4 (the vertex bound argument fails below 4)");
  if (t > TriplePoset::kMaxT) throw RefusalError("verify_cell is limited to t <= " + std::to_string(TriplePoset::kMaxT));
  if (m < choose(t - 1, 3) || m > choose(t, 3)) {
    throw RefusalError("m=" + std::to_string(m) + " outside the window C(t-1,3) <= m <= C(t,3) for t=" +
                       std::to_string(t));
  }
  VerificationReport report;
  report.t = t;
  report.m = m;
  report.a = static_cast<int>(choose(t, 3)) - m;

  std::vector<RGraph> graphs;
  report.complete = for_each_left_compressed(t, m, [&](RGraph g) {
    if (graphs.size() >= opts.graph_budget) return false;
    graphs.push_back(std::move(g));
    return true;
  });
  report.graph_count = graphs.size();

  const RGraph colex = colex_on(t, m);
  std::vector<LagrangianResult> results(graphs.size());
  parallel_for(graphs.size(), opts.workers, [&](std::size_t k) { results[k] = lagrangian(graphs[k], opts.solver); });

  report.max_value = -1.0;
  std::optional<std::size_t> colex_index;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    GraphRecord rec{graphs[k], std::move(results[k]), symmetric_difference_size(graphs[k], colex),
                    static_cast<int>(pair_link(graphs[k], t - 1, t).size()), {}, true};
    rec.kkt = kkt_check(rec.graph, rec.result.weighting, rec.result.value);
    rec.monotone = non_increasing(rec.result.weighting.values());
    report.certified = report.certified && rec.result.certified && rec.result.complete;
    report.max_value = std::max(report.max_value, rec.result.value);
    if (rec.graph == colex) colex_index = k;
    report.graphs.push_back(std::move(rec));
  }
  report.colex_enumerated = colex_index.has_value();
  report.colex_value = colex_index ? report.graphs[*colex_index].result.value : lagrangian(colex, opts.solver).value;
  if (report.graphs.empty()) report.max_value = report.colex_value;
  report.gap = report.colex_value - report.max_value;
  for (std::size_t k = 0; k < report.graphs.size(); ++k) {
    if (report.graphs[k].result.value >= report.max_value - opts.witness_tolerance) report.witnesses.push_back(k);
  }
  report.colex_is_witness =
      colex_index && std::find(report.witnesses.begin(), report.witnesses.end(), *colex_index) != report.witnesses.end();
  report.all_pass = report.gap >= -opts.pass_tolerance && report.certified && report.complete &&
                    report.colex_enumerated;
  return report;
}

/// Every cell for 4 <= t <= t_max, ordered by (t, m). A value of m on the
/// boundary of two windows appears once for each t.
inline std::vector<VerificationReport> sweep(int t_max, const VerifyOptions& opts = {}) {
  if (t_max < 4) throw RefusalError("sweep needs t_max >= 4");
  if (t_max > TriplePoset::kMaxT) throw RefusalError("sweep is limited to t_max <= " + std::to_string(TriplePoset::kMaxT));
  std::vector<std::pair<int, int>> cells;
  for (int t = 4; t <= t_max; ++t)
    for (int m : cell_window(t)) cells.emplace_back(t, m);
  std::vector<VerificationReport> reports(cells.size());
  VerifyOptions inner = opts;
  inner.workers = 1;
  parallel_for(cells.size(), opts.workers,
               [&](std::size_t k) { reports[k] = verify_cell(cells[k].first, cells[k].second, inner); });
  return reports;
}

struct CheckResult {
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

/// Least edge count a left-compressed extremal 3-graph needs for an optimal
/// weighting with support k.
inline std::int64_t support_edge_bound(int k) { return choose(k - 1, 3) + choose(k - 2, 2) - (k - 2); }

/// Every witness's optimal support k satisfies m >= support_edge_bound(k)
/// and k <= t.
inline CheckResult check_support_bound(const VerificationReport& report) {
  CheckResult out;
  for (std::size_t w : report.witnesses) {
    const int k = report.graphs[w].result.support;
    if (report.m < support_edge_bound(k) || k > report.t) {
      out.pass = false;
      out.detail = "witness with support " + std::to_string(k) + " violates the bound at t=" +
                   std::to_string(report.t) + ", m=" + std::to_string(report.m);
      return out;
    }
  }
  return out;
}

/// Offset of m from C(t-1,3) + C(t-2,2).
inline int plateau_offset(int t, int m) { return m - static_cast<int>(choose(t - 1, 3) + choose(t - 2, 2)); }

/// For m = C(t-1,3) + C(t-2,2) + a with -(t-2) <= a <= t-5, every witness
/// differs from C_{3,m} in at most 2(t-a-2) edges.
inline CheckResult check_delta_bound(const VerificationReport& report) {
  CheckResult out;
  const int t = report.t;
  const int a = plateau_offset(t, report.m);
  if (a < -(t - 2) || a > t - 5) {
    out.applicable = false;
    return out;
  }
  const auto bound = static_cast<std::size_t>(2 * (t - a - 2));
  for (std::size_t w : report.witnesses) {
    if (report.graphs[w].delta > bound) {
      out.pass = false;
      out.detail = "witness differs from C_{3,m} in " + std::to_string(report.graphs[w].delta) + " edges, bound " +
                   std::to_string(bound);
      return out;
    }
  }
  out.detail = "bound " + std::to_string(bound);
  return out;
}

/// Every enumerated graph within six edges of C_{3,m} has lambda at most
/// lambda(C_{3,m}).
inline CheckResult check_small_difference(const VerificationReport& report, double tol = 1e-7) {
  CheckResult out;
  for (const GraphRecord& rec : report.graphs) {
    if (rec.delta <= 6 && rec.result.value > report.colex_value + tol) {
      out.pass = false;
      out.detail = "graph with difference " + std::to_string(rec.delta) + " beats C_{3,m}";
      return out;
    }
  }
  return out;
}

/// Graphs with few edges through {t-1, t}: if |E_{(t-1)t}| <= b + 3 for a
/// positive b with m > C(t-1,3) + C(t-2,2) + b, then G is within six edges of
/// C_{3,m} and lambda(G) <= lambda(C_{3,m}).
inline CheckResult check_sparse_top_pair(const VerificationReport& report, double tol = 1e-7) {
  CheckResult out;
  out.applicable = false;
  const int offset = plateau_offset(report.t, report.m);
  for (const GraphRecord& rec : report.graphs) {
    const int b = std::max(1, rec.top_pair_degree - 3);
    if (offset <= b) continue;
    out.applicable = true;
    if (rec.delta > 6 || rec.result.value > report.colex_value + tol) {
      out.pass = false;
      out.detail = "graph with |E_(t-1)t| = " + std::to_string(rec.top_pair_degree) + " differs in " +
                   std::to_string(rec.delta) + " edges";
      return out;
    }
  }
  return out;
}

/// A range of m, per t, where the inequality is claimed or open.
struct MWindow {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
};

inline std::vector<MWindow> known_windows(int t) {
  const std::int64_t base = choose(t - 1, 3);
  const std::int64_t plateau = base + choose(t - 2, 2);
  const std::int64_t full = choose(t, 3);
  return {
      {"low_plateau_t_minus_1", base, plateau - (t - 1)},
      {"low_plateau_t_minus_4", base, plateau - (t - 4)},
      {"one_or_two_missing", full - 2, full - 1},
      {"three_to_six_missing", full - 6, full - 3},
      {"open_range", plateau - (t - 5), full - 3},
  };
}

/// Cells of `reports` at t whose m lies in the window; passes if all pass.
inline CheckResult check_window(const std::vector<VerificationReport>& reports, int t, const MWindow& window) {
  CheckResult out;
  out.applicable = false;
  for (const VerificationReport& r : reports) {
    if (r.t != t || r.m < window.lo || r.m > window.hi) continue;
    out.applicable = true;
    if (!r.all_pass) {
      out.pass = false;
      out.detail = window.name + " fails at m=" + std::to_string(r.m);
      return out;
    }
  }
  return out;
}

enum class Verdict { pass, fail, inconclusive };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct InequalityReport {
  ConfigurationSpec spec;
  int m = 0;
  double value = 0.0;
  double colex_value = 0.0;
  std::optional<double> companion_value;
  /// colex_value - value
  double margin = 0.0;
  bool certified = true;
  Verdict verdict = Verdict::inconclusive;
  LagrangianResult result;
};

/// lambda(G) <= lambda(C_{3,m}) for a configuration, and for families with a
/// companion G' also lambda(G) <= lambda(G') <= lambda(C_{3,m}).
inline InequalityReport check_theorem_inequality(const ConfigurationSpec& spec, const SolverOptions& opts = {},
                                                 double tol = 1e-7) {
  InequalityReport out;
  out.spec = spec;
  const RGraph g = build_configuration(spec);
  out.m = static_cast<int>(g.size());
  out.result = lagrangian(g, opts);
  const LagrangianResult colex = lagrangian(colex_on(spec.t, out.m), opts);
  out.value = out.result.value;
  out.colex_value = colex.value;
  out.margin = out.colex_value - out.value;
  out.certified = out.result.certified && colex.certified;
  bool holds = out.margin >= -tol;
  if (const auto companion = companion_configuration(spec)) {
    const LagrangianResult c = lagrangian(*companion, opts);
    out.companion_value = c.value;
    out.certified = out.certified && c.certified;
    holds = holds && out.value <= c.value + tol && c.value <= out.colex_value + tol;
  }
  out.verdict = !out.certified ? Verdict::inconclusive : holds ? Verdict::pass : Verdict::fail;
  return out;
}

/// Groups consecutive vertices whose weights agree within tol; returns
/// 1-based vertex lists.
inline std::vector<std::vector<int>> equal_weight_runs(std::span<const double> x, double tol) {
  std::vector<std::vector<int>> runs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && std::abs(x[i] - x[i - 1]) <= tol) {
      runs.back().push_back(static_cast<int>(i) + 1);
    } else {
      runs.push_back({static_cast<int>(i) + 1});
    }
  }
  return runs;
}

}  // namespace laglab
