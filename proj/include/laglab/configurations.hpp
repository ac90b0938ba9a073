#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laglab/colex.hpp"
#include "laglab/error.hpp"
#include "laglab/rgraph.hpp"

namespace laglab {

/// Named left-compressed 3-graphs on [t] close to the complete graph, given
/// by their missing triples. In the descriptions below G^c lists the missing
/// triples and "the top s triples p(t-1)t" means p = t-2, t-3, ..., t-1-s.
enum class Family {
  /// G^c = {p(t-2)t : t-2-i <= p <= t-3} plus the top a-i triples p(t-1)t,
  /// so the colex-least missing triple is (t-2-i)(t-2)t.
  tail_gap,
  /// G^c = {(t-4)(t-3)t, (t-4)(t-2)t, (t-3)(t-2)t} plus the top a-3
  /// triples p(t-1)t; G contains the clique [t-1].
  clique_gap,
  /// G^c = {(t-3)(t-2)(t-1), (t-3)(t-2)t} plus the top a-2 triples p(t-1)t.
  /// Companion: tail_gap with i = 2.
  subclique_swap,
  /// G^c = {(t-2)(t-1)t, (t-3)(t-1)t, (t-3)(t-2)t, (t-3)(t-2)(t-1)}.
  four_missing,
  /// G^c = {(t-3)(t-2)(t-1), (t-3)(t-2)t, (t-4)(t-2)t} plus the top a-3
  /// triples p(t-1)t. Companion: tail_gap with i = 3.
  subclique_swap_wide,
  /// G^c = {(t-2)(t-1)t, (t-3)(t-1)t, (t-4)(t-1)t, (t-3)(t-2)t, (t-4)(t-2)t,
  /// (t-3)(t-2)(t-1)}. Companion: G + (t-4)(t-2)t - (t-5)(t-1)t.
  six_missing,
  /// The six shapes of the missing triples outside the top link of (t-1)t
  /// when G is within six edges of C_{3,m}; `index` picks the shape.
  small_difference_case,
};

/// A family member: t, the family, and whichever of i, a, index it uses.
struct ConfigurationSpec {
  Family family = Family::tail_gap;
  int t = 0;
  int i = 0;
  int a = 0;
  int index = 0;
};

struct FamilyInfo {
  Family family;
  std::string_view cli_name;
  bool uses_i;
  bool uses_a;
  bool uses_index;
};

inline constexpr std::array<FamilyInfo, 12> kFamilyNames{{
    {Family::tail_gap, "thm1.10", true, true, false},
    {Family::clique_gap, "lemma3.3", false, true, false},
    {Family::subclique_swap, "lemma3.4", false, true, false},
    {Family::four_missing, "lemma3.5", false, false, false},
    {Family::subclique_swap_wide, "lemma3.6", false, true, false},
    {Family::six_missing, "lemma3.7", false, false, false},
    {Family::small_difference_case, "case1", false, true, true},
    {Family::small_difference_case, "case2", false, true, true},
    {Family::small_difference_case, "case3", false, true, true},
    {Family::small_difference_case, "case4", false, true, true},
    {Family::small_difference_case, "case5", false, true, true},
    {Family::small_difference_case, "case6", false, true, true},
}};

/// Parses a CLI family name; case names fill `index`.
inline std::optional<ConfigurationSpec> parse_family(std::string_view name) {
  for (const FamilyInfo& info : kFamilyNames) {
    if (info.cli_name != name) continue;
    ConfigurationSpec spec;
    spec.family = info.family;
    if (info.uses_index) spec.index = name.back() - '0';
    return spec;
  }
  return std::nullopt;
}

inline std::string family_name(const ConfigurationSpec& spec) {
  if (spec.family == Family::small_difference_case) return "case" + std::to_string(spec.index);
  for (const FamilyInfo& info : kFamilyNames)
    if (info.family == spec.family) return std::string(info.cli_name);
  return "unknown";
}

inline std::string describe(const ConfigurationSpec& spec) {
  std::string out = family_name(spec) + " t=" + std::to_string(spec.t);
  if (spec.family == Family::tail_gap) out += " i=" + std::to_string(spec.i);
  if (spec.family != Family::four_missing && spec.family != Family::six_missing) out += " a=" + std::to_string(spec.a);
  return out;
}

namespace detail {

inline Edge triple(int a, int b, int c) { return Edge{a, b, c}; }

/// The top `count` triples p(t-1)t, p = t-2 downwards.
inline void add_top_link(std::vector<Edge>& out, int t, int count) {
  for (int p = t - 2; p > t - 2 - count; --p) out.push_back(triple(p, t - 1, t));
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw RefusalError(what);
}

/// Shapes of the six small-difference cases and their least total size.
inline std::vector<Edge> case_core(int index, int t) {
  switch (index) {
    case 1: return {triple(t - 3, t - 2, t)};
    case 2: return {triple(t - 3, t - 2, t), triple(t - 4, t - 2, t)};
    case 3: return {triple(t - 3, t - 2, t), triple(t - 3, t - 2, t - 1)};
    case 4: return {triple(t - 3, t - 2, t), triple(t - 4, t - 2, t), triple(t - 5, t - 2, t)};
    case 5: return {triple(t - 3, t - 2, t), triple(t - 4, t - 2, t), triple(t - 4, t - 3, t)};
    case 6: return {triple(t - 3, t - 2, t), triple(t - 4, t - 2, t), triple(t - 3, t - 2, t - 1)};
    default: throw RefusalError("case index must be in 1..6");
  }
}

/// Least a for which the case shape is left-compressed: the core plus the
/// top-link triples every core triple forces out.
inline int case_min_a(int index) {
  constexpr std::array<int, 7> kMin{0, 3, 5, 4, 7, 6, 6};
  return kMin.at(static_cast<std::size_t>(index));
}

}  // namespace detail

/// Checks the parameter ranges of a family; throws RefusalError naming the
/// violated bound.
inline void validate(const ConfigurationSpec& spec) {
  using detail::require;
  const int t = spec.t;
  const std::string ts = std::to_string(t);
  switch (spec.family) {
    case Family::tail_gap:
      require(spec.i >= 1, "thm1.10 requires i >= 1");
      require(spec.a >= 3 && spec.a <= t - 2, "thm1.10 requires 3 <= a <= t-2 (t=" + ts + ")");
      require(spec.a >= 2 * spec.i + 1, "thm1.10 requires a >= 2i+1 for the colex-least missing triple "
                                        "(t-2-i)(t-2)t to leave a left-compressed graph");
      break;
    case Family::clique_gap:
      require(spec.a >= 6 && spec.a <= t - 2, "lemma3.3 configuration requires 6 <= a <= t-2 (t=" + ts + ")");
      break;
    case Family::subclique_swap:
      require(spec.a >= 5 && spec.a <= t - 2, "lemma3.4 requires 5 <= a <= t-2 (t=" + ts + ")");
      break;
    case Family::four_missing:
      require(t >= 6, "lemma3.5 requires t >= 6");
      break;
    case Family::subclique_swap_wide:
      require(spec.a >= 7 && spec.a <= t - 2, "lemma3.6 requires 7 <= a <= t-2 (t=" + ts + ")");
      break;
    case Family::six_missing:
      require(t >= 6, "lemma3.7 requires t >= 6");
      break;
    case Family::small_difference_case: {
      require(spec.index >= 1 && spec.index <= 6, "case index must be in 1..6");
      const int lo = detail::case_min_a(spec.index);
      require(spec.a >= lo && spec.a <= t - 2, "case" + std::to_string(spec.index) + " requires " +
                                                   std::to_string(lo) + " <= a <= t-2 (t=" + ts + ")");
      break;
    }
  }
  require(t >= 4 && t <= 12, "configurations are built for 4 <= t <= 12");
}

/// Missing triples of the configuration, sorted in colex order.
inline std::vector<Edge> complement_triples(const ConfigurationSpec& spec) {
  validate(spec);
  using detail::triple;
  const int t = spec.t;
  std::vector<Edge> out;
  switch (spec.family) {
    case Family::tail_gap:
      for (int p = t - 2 - spec.i; p <= t - 3; ++p) out.push_back(triple(p, t - 2, t));
      detail::add_top_link(out, t, spec.a - spec.i);
      break;
    case Family::clique_gap:
      out = {triple(t - 4, t - 3, t), triple(t - 4, t - 2, t), triple(t - 3, t - 2, t)};
      detail::add_top_link(out, t, spec.a - 3);
      break;
    case Family::subclique_swap:
      out = {triple(t - 3, t - 2, t - 1), triple(t - 3, t - 2, t)};
      detail::add_top_link(out, t, spec.a - 2);
      break;
    case Family::four_missing:
      out = {triple(t - 2, t - 1, t), triple(t - 3, t - 1, t), triple(t - 3, t - 2, t), triple(t - 3, t - 2, t - 1)};
      break;
    case Family::subclique_swap_wide:
      out = {triple(t - 3, t - 2, t - 1), triple(t - 3, t - 2, t), triple(t - 4, t - 2, t)};
      detail::add_top_link(out, t, spec.a - 3);
      break;
    case Family::six_missing:
      out = {triple(t - 2, t - 1, t), triple(t - 3, t - 1, t), triple(t - 4, t - 1, t),
             triple(t - 3, t - 2, t), triple(t - 4, t - 2, t), triple(t - 3, t - 2, t - 1)};
      break;
    case Family::small_difference_case: {
      out = detail::case_core(spec.index, t);
      detail::add_top_link(out, t, spec.a - static_cast<int>(out.size()));
      break;
    }
  }
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

/// The configuration graph on [t]. Throws if the construction is not
/// left-compressed or loses edges, which would mean a wrong shape.
inline RGraph build_configuration(const ConfigurationSpec& spec) {
  const auto missing = complement_triples(spec);
  const RGraph full = complete_graph(3, spec.t);
  const RGraph g = full.modified({}, missing);
  if (g.size() + missing.size() != full.size()) throw Error("configuration lists a triple twice: " + describe(spec));
  if (!is_left_compressed(g)) throw Error("configuration is not left-compressed: " + describe(spec));
  return g;
}

/// The comparison graph some families are routed through on the way to
/// C_{3,m}, when there is one.
inline std::optional<RGraph> companion_configuration(const ConfigurationSpec& spec) {
  switch (spec.family) {
    case Family::subclique_swap:
      return build_configuration({Family::tail_gap, spec.t, 2, spec.a, 0});
    case Family::subclique_swap_wide:
      return build_configuration({Family::tail_gap, spec.t, 3, spec.a, 0});
    case Family::six_missing: {
      const int t = spec.t;
      return build_configuration(spec).modified({Edge{t - 4, t - 2, t}}, {Edge{t - 5, t - 1, t}});
    }
    default:
      return std::nullopt;
  }
}

/// Every valid member of every family at t, in a fixed order.
inline std::vector<ConfigurationSpec> all_configurations(int t) {
  std::vector<ConfigurationSpec> out;
  auto try_add = [&](ConfigurationSpec spec) {
    try {
      validate(spec);
      out.push_back(spec);
    } catch (const RefusalError&) {
    }
  };
  for (int i = 1; i <= t; ++i)
    for (int a = 3; a <= t - 2; ++a) try_add({Family::tail_gap, t, i, a, 0});
  for (int a = 3; a <= t - 2; ++a) try_add({Family::clique_gap, t, 0, a, 0});
  for (int a = 3; a <= t - 2; ++a) try_add({Family::subclique_swap, t, 0, a, 0});
  try_add({Family::four_missing, t, 0, 4, 0});
  for (int a = 3; a <= t - 2; ++a) try_add({Family::subclique_swap_wide, t, 0, a, 0});
  try_add({Family::six_missing, t, 0, 6, 0});
  for (int k = 1; k <= 6; ++k)
    for (int a = 3; a <= t - 2; ++a) try_add({Family::small_difference_case, t, 0, a, k});
  return out;
}

}  // namespace laglab
