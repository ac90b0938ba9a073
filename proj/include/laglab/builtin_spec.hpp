#pragma once

#include <charconv>
#include <map>
#include <string>
#include <string_view>

#include "laglab/configurations.hpp"
#include "laglab/error.hpp"
#include "laglab/rgraph.hpp"

namespace laglab {

/// Graphs named without a file:
///
///   colex:r=R,m=M                 C_{R,M}
///   complete:r=R,t=T              [T]^(R)
///   family:NAME,t=T[,i=I][,a=A]   a configuration, NAME as for verify-config
///
/// Errors are ParseErrors on line 1 with the column of the offending key.
inline bool is_builtin_spec(std::string_view text) {
  return text.starts_with("colex:") || text.starts_with("complete:") || text.starts_with("family:");
}

namespace detail {

struct SpecFields {
  std::string head;
  std::size_t head_column = 0;
  std::map<std::string, std::pair<std::int64_t, std::size_t>, std::less<>> values;
};

inline SpecFields split_spec(std::string_view text, bool leading_name) {
  SpecFields out;
  const std::size_t colon = text.find(':');
  std::size_t pos = colon + 1;
  bool first = true;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t column = pos + 1;
    if (first && leading_name) {
      if (item.empty()) throw ParseError(1, column, "missing family name");
      out.head = std::string(item);
      out.head_column = column;
    } else {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw ParseError(1, column, "expected key=value");
      const std::string_view key = item.substr(0, eq);
      const std::string_view value = item.substr(eq + 1);
      std::int64_t parsed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError(1, column + eq + 1, "expected an integer for " + std::string(key));
      }
      if (!out.values.emplace(std::string(key), std::pair{parsed, column}).second) {
        throw ParseError(1, column, "repeated key " + std::string(key));
      }
    }
    first = false;
    pos = comma + 1;
  }
  return out;
}

inline std::int64_t need(const SpecFields& f, std::string_view key, std::size_t column) {
  const auto it = f.values.find(key);
  if (it == f.values.end()) throw ParseError(1, column, "missing " + std::string(key) + "=");
  return it->second.first;
}

inline void only_keys(const SpecFields& f, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, entry] : f.values) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(1, entry.second, "unknown key " + key);
    }
  }
}

}  // namespace detail

inline RGraph parse_builtin_spec(std::string_view text) {
  const std::size_t end = text.size() + 1;
  if (text.starts_with("colex:")) {
    const auto f = detail::split_spec(text, false);
    detail::only_keys(f, {"r", "m"});
    const auto r = detail::need(f, "r", end);
    const auto m = detail::need(f, "m", end);
    if (r < 1 || r > 8) throw ParseError(1, f.values.at("r").second, "r must be in 1..8");
    if (m < 0 || m > (1 << 22)) throw ParseError(1, f.values.at("m").second, "m out of range");
    return build_colex_graph(static_cast<int>(r), static_cast<std::uint64_t>(m));
  }
  if (text.starts_with("complete:")) {
    const auto f = detail::split_spec(text, false);
    detail::only_keys(f, {"r", "t"});
    const auto r = detail::need(f, "r", end);
    const auto t = detail::need(f, "t", end);
    if (r < 1 || r > 8) throw ParseError(1, f.values.at("r").second, "r must be in 1..8");
    if (t < 0 || t > 64) throw ParseError(1, f.values.at("t").second, "t must be in 0..64");
    return complete_graph(static_cast<int>(r), static_cast<int>(t));
  }
  if (text.starts_with("family:")) {
    const auto f = detail::split_spec(text, true);
    detail::only_keys(f, {"t", "i", "a"});
    auto spec = parse_family(f.head);
    if (!spec) throw ParseError(1, f.head_column, "unknown family " + f.head);
    spec->t = static_cast<int>(detail::need(f, "t", end));
    if (const auto it = f.values.find("i"); it != f.values.end()) spec->i = static_cast<int>(it->second.first);
    if (const auto it = f.values.find("a"); it != f.values.end()) spec->a = static_cast<int>(it->second.first);
    return build_configuration(*spec);
  }
  throw ParseError(1, 1, "unknown builtin; expected colex:, complete: or family:");
}

}  // namespace laglab
