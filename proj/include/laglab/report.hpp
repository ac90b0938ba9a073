#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "laglab/edge_list_io.hpp"
#include "laglab/lagrangian.hpp"
#include "laglab/verifier.hpp"

namespace laglab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Shortest-safe rendering: 17 significant digits round-trip every double.
inline std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

namespace detail {

inline void render(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        render(value, out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) {
          out += nl;
          out += pad;
        }
        first = false;
        render(value, out, indent, depth + 1);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// JSON text with every float printed to 17 significant digits.
inline std::string render_json(const Json& j, int indent = 2) {
  std::string out;
  detail::render(j, out, indent, 0);
  out += '\n';
  return out;
}

inline Json to_json(const LagrangianResult& r) {
  Json j;
  j["value"] = r.value;
  j["weighting"] = std::vector<double>(r.weighting.values().begin(), r.weighting.values().end());
  j["support"] = r.support;
  j["kkt_residual"] = r.kkt_residual;
  j["method"] = std::string(to_string(r.method));
  j["certified"] = r.certified;
  j["complete"] = r.complete;
  if (r.cross_check_value) j["cross_check_value"] = *r.cross_check_value;
  return j;
}

inline Json to_json(const CheckResult& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["pass"] = c.pass;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["t"] = r.t;
  j["m"] = r.m;
  j["a"] = r.a;
  j["enumerated_class"] = "left-compressed 3-graphs on [t]";
  j["colex_value"] = r.colex_value;
  j["max_value"] = r.max_value;
  j["gap"] = r.gap;
  j["graph_count"] = r.graph_count;
  j["all_pass"] = r.all_pass;
  j["certified"] = r.certified;
  j["complete"] = r.complete;
  j["colex_is_witness"] = r.colex_is_witness;
  Json witnesses = Json::array();
  for (std::size_t w : r.witnesses) {
    const GraphRecord& rec = r.graphs[w];
    Json e;
    e["edge_list"] = to_edge_list(rec.graph);
    e["difference_from_colex"] = rec.delta;
    e["result"] = to_json(rec.result);
    witnesses.push_back(std::move(e));
  }
  j["witnesses"] = std::move(witnesses);
  Json checks;
  checks["support_bound"] = to_json(check_support_bound(r));
  checks["delta_bound"] = to_json(check_delta_bound(r));
  checks["small_difference"] = to_json(check_small_difference(r));
  checks["sparse_top_pair"] = to_json(check_sparse_top_pair(r));
  j["checks"] = std::move(checks);
  return j;
}

inline Json to_json(const InequalityReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = family_name(r.spec);
  j["t"] = r.spec.t;
  if (r.spec.family == Family::tail_gap) j["i"] = r.spec.i;
  j["a"] = static_cast<int>(choose(r.spec.t, 3)) - r.m;
  j["m"] = r.m;
  j["value"] = r.value;
  j["colex_value"] = r.colex_value;
  if (r.companion_value) j["companion_value"] = *r.companion_value;
  j["margin"] = r.margin;
  j["certified"] = r.certified;
  j["verdict"] = std::string(to_string(r.verdict));
  j["result"] = to_json(r.result);
  return j;
}

inline Json sweep_json(const std::vector<VerificationReport>& reports) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json cells = Json::array();
  for (const auto& r : reports) cells.push_back(to_json(r));
  j["cells"] = std::move(cells);
  return j;
}

inline std::string csv_header() { return "t,m,a,colex_value,max_value,gap,graph_count,all_pass\n"; }

inline std::string csv_row(const VerificationReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{}\n", r.t, r.m, r.a, format_real(r.colex_value),
                     format_real(r.max_value), format_real(r.gap), r.graph_count, r.all_pass ? "true" : "false");
}

inline std::string sweep_csv(const std::vector<VerificationReport>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) out += csv_row(r);
  return out;
}

inline std::string render_text(const LagrangianResult& r) {
  std::string out;
  out += "value         " + format_real(r.value) + "\n";
  out += "weighting    ";
  for (double v : r.weighting.values()) out += " " + format_real(v);
  out += "\n";
  out += fmt::format("support       {}\n", r.support);
  out += "kkt_residual  " + format_real(r.kkt_residual) + "\n";
  out += fmt::format("method        {}\n", to_string(r.method));
  out += fmt::format("certified     {}\n", r.certified ? "yes" : "no");
  return out;
}

inline std::string render_csv(const LagrangianResult& r) {
  std::string weights;
  for (std::size_t i = 0; i < r.weighting.size(); ++i) {
    if (i) weights += ' ';
    weights += format_real(r.weighting[i]);
  }
  return "value,support,kkt_residual,method,certified,weighting\n" +
         fmt::format("{},{},{},{},{},{}\n", format_real(r.value), r.support, format_real(r.kkt_residual),
                     to_string(r.method), r.certified ? "true" : "false", weights);
}

inline std::string render_text(const VerificationReport& r) {
  return fmt::format("t={} m={} a={} graphs={} colex={} max={} gap={} witnesses={} {}\n", r.t, r.m, r.a,
                     r.graph_count, format_real(r.colex_value), format_real(r.max_value), format_real(r.gap),
                     r.witnesses.size(), r.all_pass ? "pass" : "FAIL");
}

inline std::string render_text(const InequalityReport& r) {
  std::string out = describe(r.spec) + fmt::format(" m={}\n", r.m);
  out += "lambda(G)        " + format_real(r.value) + "\n";
  if (r.companion_value) out += "lambda(G')       " + format_real(*r.companion_value) + "\n";
  out += "lambda(C_{3,m})  " + format_real(r.colex_value) + "\n";
  out += "margin           " + format_real(r.margin) + "\n";
  out += fmt::format("verdict          {}\n", to_string(r.verdict));
  return out;
}

}  // namespace laglab
