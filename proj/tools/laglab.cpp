// laglab: Lagrangians of r-graphs and exhaustive checks for 3-graphs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "laglab/laglab.hpp"

namespace fs = std::filesystem;
using namespace laglab;

namespace {

enum Exit : int { ok = 0, usage = 1, uncertified = 2, incomplete = 3, failed = 4 };

struct Common {
  std::string seed_text;
  double tol = 1e-7;
  double kkt_tol = 1e-8;
  int starts = 32;
  std::string format = "json";
  std::string out;
  int workers = default_workers();
  std::uint64_t graph_budget = 1'000'000;
  std::optional<int> r;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LAGLAB_SEED"); env && *env) return std::stoull(env, nullptr, 0);
  return 0xF2F2;
}

SolverOptions solver_options(const Common& c) {
  SolverOptions s;
  s.seed = c.seed_text.empty() ? default_seed() : std::stoull(c.seed_text, nullptr, 0);
  s.kkt_tolerance = c.kkt_tol;
  s.starts = c.starts;
  return s;
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions v;
  v.solver = solver_options(c);
  v.workers = c.workers;
  v.pass_tolerance = c.tol;
  v.graph_budget = c.graph_budget;
  return v;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed_text, "random-start seed, decimal or 0x-hex (default 0xF2F2, env LAGLAB_SEED)");
  cmd->add_option("--tol", c.tol, "tolerance of the inequality lambda(G) <= lambda(C_{3,m})")->check(CLI::PositiveNumber);
  cmd->add_option("--kkt-tol", c.kkt_tol, "stationarity residual allowed on certified results")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--starts", c.starts, "solver starts per graph")->check(CLI::Range(1, 100000));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out, "output path (a directory for sweep and enumerate --list)");
  cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("--r", c.r, "uniformity");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw Error("cannot write " + c.out);
  file << text;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path.string());
  file << text;
}

void require_r3(const Common& c) {
  if (c.r && *c.r != 3) throw RefusalError("only r = 3 is enumerated");
}

int cmd_compute(const Common& c, const std::string& source) {
  const RGraph g = is_builtin_spec(source) ? parse_builtin_spec(source) : read_edge_list_file(source);
  if (c.r && *c.r != g.uniformity()) {
    throw RefusalError(fmt::format("--r {} does not match the graph's uniformity {}", *c.r, g.uniformity()));
  }
  const LagrangianResult result = lagrangian(g, solver_options(c));
  if (c.format == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["r"] = g.uniformity();
    j["n"] = g.order();
    j["m"] = g.size();
    j["result"] = to_json(result);
    emit(c, render_json(j));
  } else if (c.format == "csv") {
    emit(c, render_csv(result));
  } else {
    emit(c, render_text(result));
  }
  return result.certified ? ok : uncertified;
}

int sweep_exit(const std::vector<VerificationReport>& reports) {
  bool any_incomplete = false, any_uncertified = false, any_failed = false;
  for (const auto& r : reports) {
    if (!r.complete) {
      any_incomplete = true;
      std::cerr << fmt::format("incomplete cell t={} m={}\n", r.t, r.m);
    }
    if (!r.certified) any_uncertified = true;
    if (!r.all_pass) any_failed = true;
  }
  if (any_incomplete) return incomplete;
  if (any_uncertified) return uncertified;
  return any_failed ? failed : ok;
}

int cmd_sweep(const Common& c, int t_max) {
  require_r3(c);
  if (t_max < 4 || t_max > TriplePoset::kMaxT) throw RefusalError("--t-max must be in 4..8");
  const auto reports = sweep(t_max, verify_options(c));
  std::string text;
  if (c.format == "json") {
    text = render_json(sweep_json(reports));
  } else if (c.format == "csv") {
    text = sweep_csv(reports);
  } else {
    for (const auto& r : reports) text += render_text(r);
  }
  if (c.out.empty()) {
    std::cout << text;
  } else {
    fs::create_directories(c.out);
    for (const auto& r : reports) {
      write_file(fs::path(c.out) / fmt::format("cell_t{}_m{}.json", r.t, r.m), render_json(to_json(r)));
    }
    write_file(fs::path(c.out) / "summary.csv", sweep_csv(reports));
  }
  return sweep_exit(reports);
}

int cmd_verify_config(const Common& c, const std::string& family, int t, std::optional<int> i,
                      std::optional<int> a) {
  auto spec = parse_family(family);
  if (!spec) throw RefusalError("unknown family " + family);
  spec->t = t;
  if (i) spec->i = *i;
  if (a) spec->a = *a;
  if (spec->family == Family::four_missing) spec->a = 4;
  if (spec->family == Family::six_missing) spec->a = 6;
  const InequalityReport report = check_theorem_inequality(*spec, solver_options(c), c.tol);
  emit(c, c.format == "text" ? render_text(report) : render_json(to_json(report)));
  switch (report.verdict) {
    case Verdict::pass: return ok;
    case Verdict::inconclusive: return uncertified;
    case Verdict::fail: return failed;
  }
  return failed;
}

int cmd_enumerate(const Common& c, int t, int m, bool list) {
  require_r3(c);
  if (t < 3 || t > TriplePoset::kMaxT) throw RefusalError("--t must be in 3..8");
  if (m < 0 || m > choose(t, 3)) throw RefusalError("--m must be in 0..C(t,3)");
  const auto graphs = enumerate_left_compressed(t, m);
  if (!list) {
    std::cout << graphs.size() << "\n";
    return ok;
  }
  if (!c.out.empty()) {
    fs::create_directories(c.out);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      write_file(fs::path(c.out) / fmt::format("graph_{:04}.edges", k + 1), to_edge_list(graphs[k]));
    }
    std::cout << graphs.size() << "\n";
    return ok;
  }
  std::cout << "# " << graphs.size() << " graphs\n";
  for (std::size_t k = 0; k < graphs.size(); ++k) std::cout << "# graph " << k + 1 << "\n" << to_edge_list(graphs[k]);
  return ok;
}

int cmd_check(const Common& c, int t, int m) {
  require_r3(c);
  const VerificationReport report = verify_cell(t, m, verify_options(c));
  const CheckResult support = check_support_bound(report);
  const CheckResult delta = check_delta_bound(report);
  const CheckResult small = check_small_difference(report, c.tol);
  const CheckResult sparse = check_sparse_top_pair(report, c.tol);
  if (c.format == "text") {
    std::string text = render_text(report);
    auto line = [](std::string_view name, const CheckResult& r) {
      return fmt::format("{:<18}{}\n", name, !r.applicable ? "n/a" : r.pass ? "pass" : "FAIL " + r.detail);
    };
    text += line("support_bound", support) + line("delta_bound", delta) + line("small_difference", small) +
            line("sparse_top_pair", sparse);
    emit(c, text);
  } else if (c.format == "csv") {
    emit(c, csv_header() + csv_row(report));
  } else {
    emit(c, render_json(to_json(report)));
  }
  int code = sweep_exit({report});
  if (code == ok && !(support.pass && delta.pass && small.pass && sparse.pass)) code = failed;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laglab: Lagrangians of uniform hypergraphs and colex-extremality checks for 3-graphs"};
  app.require_subcommand(1);
  app.footer(
      "Graph sources for compute: an edge-list file (`r n m` header, one edge per line) or a builtin\n"
      "  colex:r=R,m=M                 first M R-sets in colex order\n"
      "  complete:r=R,t=T              all R-subsets of [T]\n"
      "  family:NAME,t=T[,i=I][,a=A]   a named configuration (NAME as for verify-config --family)\n"
      "Exit codes: 0 ok, 1 usage or parse error, 2 uncertified result, 3 incomplete, 4 check failed.");

  Common common;
  std::string source;
  int t_max = 0, t = 0, m = 0;
  std::optional<int> i, a;
  std::string family;
  bool list = false;

  auto* compute = app.add_subcommand("compute", "Lagrangian of one graph");
  compute->add_option("source", source, "edge-list file or builtin spec")->required();
  add_common(compute, common);

  auto* sweep_cmd = app.add_subcommand("sweep", "all cells C(t-1,3) <= m <= C(t,3) for 4 <= t <= t-max");
  sweep_cmd->add_option("--t-max", t_max, "largest t")->required();
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--graph-budget", common.graph_budget, "graphs solved per cell before giving up");

  auto* verify = app.add_subcommand("verify-config", "compare a named configuration with C_{3,m}");
  verify->add_option("--family", family,
                     "thm1.10, lemma3.3, lemma3.4, lemma3.5, lemma3.6, lemma3.7, case1 .. case6")
      ->required();
  verify->add_option("--t", t, "vertex count")->required();
  verify->add_option("--i", i, "offset of the least missing triple (thm1.10)");
  verify->add_option("--a", a, "number of missing triples");
  add_common(verify, common);

  auto* enumerate = app.add_subcommand("enumerate", "count left-compressed 3-graphs on [t] with m edges");
  enumerate->add_option("--t", t)->required();
  enumerate->add_option("--m", m)->required();
  enumerate->add_flag("--list", list, "print every graph (one file each with --out DIR)");
  add_common(enumerate, common);

  auto* check = app.add_subcommand("check", "verify one cell and run the structural checks on it");
  check->add_option("--t", t)->required();
  check->add_option("--m", m)->required();
  add_common(check, common);
  check->add_option("--graph-budget", common.graph_budget, "graphs solved before giving up");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*compute) return cmd_compute(common, source);
    if (*sweep_cmd) return cmd_sweep(common, t_max);
    if (*verify) return cmd_verify_config(common, family, t, i, a);
    if (*enumerate) return cmd_enumerate(common, t, m, list);
    if (*check) return cmd_check(common, t, m);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const RefusalError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad number: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
