#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "laglab/error.hpp"

namespace laglab {

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
/// Throws RefusalError when the value does not fit in 64 bits.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    // result * (n - k + j) / j stays integral at every step
    const auto numerator = static_cast<std::uint64_t>(n - k + j);
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) {
      throw RefusalError("binomial coefficient overflows 64 bits");
    }
    result = result * numerator / static_cast<std::uint64_t>(j);
  }
  return result;
}

/// Signed convenience wrapper used by the counting bounds.
inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  return static_cast<std::int64_t>(binomial(n, k));
}

/// A strictly increasing tuple of positive (1-based) vertex labels.
///
/// Edges of an r-graph have length r; the same type also carries the
/// (r-1)- and (r-2)-sets produced by the link operations, so the empty
/// tuple is a valid value.
class Edge {
 public:
  Edge() = default;

  explicit Edge(std::vector<int> vertices) : vertices_(std::move(vertices)) { validate(); }

  Edge(std::initializer_list<int> vertices) : vertices_(vertices) { validate(); }

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int operator[](std::size_t s) const { return vertices_[s]; }
  int front() const { return vertices_.front(); }
  int back() const { return vertices_.back(); }
  std::span<const int> vertices() const noexcept { return vertices_; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  /// Sum of the labels; the descendant relation is graded by it.
  int weight() const {
    int total = 0;
    for (int v : vertices_) total += v;
    return total;
  }

  /// Copy with `v` removed (no-op if absent).
  Edge without(int v) const {
    std::vector<int> out;
    out.reserve(vertices_.size());
    for (int u : vertices_)
      if (u != v) out.push_back(u);
    return Edge(std::move(out), trusted{});
  }

  /// Copy with `v` inserted; throws if `v` is already present.
  Edge with(int v) const {
    if (contains(v)) throw Error("vertex " + std::to_string(v) + " already in edge");
    std::vector<int> out(vertices_);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Edge(std::move(out), trusted{});
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(vertices_[i]);
    }
    return s;
  }

  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  struct trusted {};
  Edge(std::vector<int> vertices, trusted) : vertices_(std::move(vertices)) {}

  void validate() const {
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
      if (vertices_[s] < 1) {
        throw VertexRangeError("edge vertex labels must be positive, got " +
                               std::to_string(vertices_[s]));
      }
      if (s > 0 && vertices_[s - 1] >= vertices_[s]) {
        throw Error("edge vertices must be strictly increasing");
      }
    }
  }

  std::vector<int> vertices_;
};

/// Colex order: A < B iff max(A symmetric-difference B) lies in B.
inline std::strong_ordering colex_compare(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) {
    throw UniformityError("colex_compare: edges of length " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
  }
  // Both are sorted, so the largest differing position decides.
  for (std::size_t s = a.size(); s-- > 0;) {
    if (a[s] != b[s]) return a[s] <=> b[s];
  }
  return std::strong_ordering::equal;
}

/// 0-based position of `a` in the colex order of all |a|-subsets of the
/// positive integers (combinatorial number system).
inline std::uint64_t colex_rank(const Edge& a) {
  std::uint64_t rank = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    rank += binomial(a[s] - 1, static_cast<std::int64_t>(s) + 1);
  }
  return rank;
}

/// Inverse of colex_rank for tuples of length r.
inline Edge colex_unrank(int r, std::uint64_t rank) {
  if (r < 0) throw UniformityError("colex_unrank: negative uniformity");
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int s = r; s >= 1; --s) {
    // largest label v with C(v - 1, s) <= rank
    std::int64_t v = s;
    while (binomial(v, s) <= rank) ++v;
    out[static_cast<std::size_t>(s - 1)] = static_cast<int>(v);
    rank -= binomial(v - 1, s);
  }
  return Edge(std::move(out));
}

/// Strict colex "less than", for use with standard algorithms.
struct ColexLess {
  bool operator()(const Edge& a, const Edge& b) const { return colex_compare(a, b) < 0; }
};

}  // namespace laglab
