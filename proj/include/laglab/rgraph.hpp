#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "laglab/colex.hpp"
#include "laglab/error.hpp"

namespace laglab {

/// An r-uniform hypergraph on the vertex set [n].
///
/// Immutable after construction. Edges are kept in colex order together
/// with a dense membership bitmap indexed by colex rank, so membership
/// tests and set operations are word operations.
class RGraph {
 public:
  /// Largest C(n, r) for which a dense bitmap is allocated.
  static constexpr std::uint64_t kMaxDenseRanks = std::uint64_t{1} << 26;

  RGraph(int r, int n) : r_(r), n_(n) {
    check_shape();
    member_.resize(static_cast<std::size_t>(binomial(n_, r_)));
  }

  RGraph(int r, int n, std::vector<Edge> edges) : RGraph(r, n) {
    ranks_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (static_cast<int>(e.size()) != r_) {
        throw UniformityError("edge {" + e.to_string() + "} has length " +
                              std::to_string(e.size()) + ", expected " + std::to_string(r_));
      }
      if (e.back() > n_) {
        throw VertexRangeError("edge {" + e.to_string() + "} exceeds vertex bound " +
                               std::to_string(n_));
      }
      const std::uint64_t rank = colex_rank(e);
      if (member_.test(rank)) throw Error("duplicate edge {" + e.to_string() + "}");
      member_.set(rank);
      ranks_.push_back(rank);
    }
    finish();
  }

  /// Build from colex ranks; every rank must be < C(n, r).
  static RGraph from_ranks(int r, int n, std::vector<std::uint64_t> ranks) {
    RGraph g(r, n);
    for (std::uint64_t rank : ranks) {
      if (rank >= g.member_.size()) {
        throw VertexRangeError("rank " + std::to_string(rank) + " outside [" +
                               std::to_string(n) + "]^(" + std::to_string(r) + ")");
      }
      if (g.member_.test(rank)) throw Error("duplicate rank " + std::to_string(rank));
      g.member_.set(rank);
    }
    g.ranks_ = std::move(ranks);
    g.finish();
    return g;
  }

  int uniformity() const noexcept { return r_; }
  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return ranks_.size(); }
  bool empty() const noexcept { return ranks_.empty(); }

  /// Edges in increasing colex order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::uint64_t>& ranks() const noexcept { return ranks_; }
  /// Number of r-subsets of [n], i.e. the size of the bitmap.
  std::size_t universe() const noexcept { return member_.size(); }

  bool contains(const Edge& e) const {
    if (static_cast<int>(e.size()) != r_ || e.empty() || e.back() > n_) return false;
    return member_.test(colex_rank(e));
  }
  bool contains_rank(std::uint64_t rank) const { return rank < member_.size() && member_.test(rank); }

  /// Same edge set on a larger (or equal) vertex bound.
  RGraph with_order(int n) const {
    if (!edges_.empty() && edges_.back().back() > n) {
      throw VertexRangeError("cannot shrink vertex bound below an edge");
    }
    return from_ranks(r_, n, ranks_);
  }

  /// Copy with `add` inserted and `remove` deleted; both lists must be consistent.
  RGraph modified(const std::vector<Edge>& add, const std::vector<Edge>& remove) const {
    boost::dynamic_bitset<> bits = member_;
    for (const Edge& e : remove) {
      if (!contains(e)) throw Error("cannot remove missing edge {" + e.to_string() + "}");
      bits.reset(colex_rank(e));
    }
    for (const Edge& e : add) {
      if (static_cast<int>(e.size()) != r_ || e.back() > n_) {
        throw VertexRangeError("edge {" + e.to_string() + "} does not fit the graph");
      }
      if (bits.test(colex_rank(e))) throw Error("edge {" + e.to_string() + "} already present");
      bits.set(colex_rank(e));
    }
    return from_bitmap(r_, n_, bits);
  }

  /// Vertices that lie on at least one edge.
  std::vector<bool> active_vertices() const {
    std::vector<bool> active(static_cast<std::size_t>(n_) + 1, false);
    for (const Edge& e : edges_)
      for (int v : e) active[static_cast<std::size_t>(v)] = true;
    return active;
  }

  /// FNV-1a over (r, n, ranks); stable across platforms and runs.
  std::uint64_t canonical_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (word >> (8 * byte)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    };
    mix(static_cast<std::uint64_t>(r_));
    mix(static_cast<std::uint64_t>(n_));
    for (std::uint64_t rank : ranks_) mix(rank);
    return h;
  }

  const boost::dynamic_bitset<>& bitmap() const noexcept { return member_; }

  static RGraph from_bitmap(int r, int n, const boost::dynamic_bitset<>& bits) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(bits.count());
    for (auto pos = bits.find_first(); pos != boost::dynamic_bitset<>::npos; pos = bits.find_next(pos)) {
      ranks.push_back(pos);
    }
    return from_ranks(r, n, std::move(ranks));
  }

  friend bool operator==(const RGraph& a, const RGraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.ranks_ == b.ranks_;
  }

 private:
  void check_shape() const {
    if (r_ < 1) throw UniformityError("uniformity must be at least 1");
    if (n_ < 0) throw VertexRangeError("vertex bound must be non-negative");
    if (binomial(n_, r_) > kMaxDenseRanks) {
      throw RefusalError("[" + std::to_string(n_) + "]^(" + std::to_string(r_) +
                         ") is too large for a dense edge bitmap");
    }
  }

  void finish() {
    std::sort(ranks_.begin(), ranks_.end());
    edges_.clear();
    edges_.reserve(ranks_.size());
    for (std::uint64_t rank : ranks_) edges_.push_back(colex_unrank(r_, rank));
  }

  int r_;
  int n_;
  std::vector<std::uint64_t> ranks_;
  std::vector<Edge> edges_;
  boost::dynamic_bitset<> member_;
};

/// The complete r-graph [t]^(r).
inline RGraph complete_graph(int r, int t) {
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(binomial(t, r)));
  std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
  return RGraph::from_ranks(r, t, std::move(ranks));
}

/// C_{r,m}: the first m r-sets in colex order, on [max vertex].
inline RGraph build_colex_graph(int r, std::uint64_t m) {
  if (r < 2) throw UniformityError("colex graphs need r >= 2");
  if (m == 0) return RGraph(r, 0);
  const int n = colex_unrank(r, m - 1).back();
  std::vector<std::uint64_t> ranks(m);
  std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
  return RGraph::from_ranks(r, n, std::move(ranks));
}

/// [n]^(r) minus the edges of G, on the same vertex bound.
inline RGraph complement(const RGraph& g) {
  boost::dynamic_bitset<> bits = g.bitmap();
  bits.flip();
  return RGraph::from_bitmap(g.uniformity(), g.order(), bits);
}

/// Number of edges in exactly one of the two graphs (uniformities must match).
inline std::size_t symmetric_difference_size(const RGraph& a, const RGraph& b) {
  if (a.uniformity() != b.uniformity()) throw UniformityError("symmetric difference across uniformities");
  std::vector<std::uint64_t> diff;
  std::set_symmetric_difference(a.ranks().begin(), a.ranks().end(), b.ranks().begin(), b.ranks().end(),
                                std::back_inserter(diff));
  return diff.size();
}

/// True when every edge of `a` is an edge of `b`.
inline bool is_subgraph(const RGraph& a, const RGraph& b) {
  return a.uniformity() == b.uniformity() &&
         std::includes(b.ranks().begin(), b.ranks().end(), a.ranks().begin(), a.ranks().end());
}

/// Image of G under the vertex relabelling v -> perm[v - 1] (perm is a
/// permutation of 1..n).
inline RGraph relabel(const RGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DimensionError("permutation length != n");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    std::vector<int> mapped;
    for (int v : e) mapped.push_back(perm[static_cast<std::size_t>(v - 1)]);
    std::sort(mapped.begin(), mapped.end());
    edges.emplace_back(std::move(mapped));
  }
  return RGraph(g.uniformity(), g.order(), std::move(edges));
}

namespace detail {

inline void check_vertex(const RGraph& g, int v) {
  if (v < 1 || v > g.order()) {
    throw VertexRangeError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(g.order()) + "]");
  }
}

}  // namespace detail

/// E_i: the (r-1)-sets A with A + {i} an edge, in colex order.
inline std::vector<Edge> link(const RGraph& g, int i) {
  detail::check_vertex(g, i);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (e.contains(i)) out.push_back(e.without(i));
  return out;
}

/// E_ij: the (r-2)-sets B with B + {i, j} an edge.
inline std::vector<Edge> pair_link(const RGraph& g, int i, int j) {
  detail::check_vertex(g, i);
  detail::check_vertex(g, j);
  if (i == j) throw VertexRangeError("pair_link needs distinct vertices");
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (e.contains(i) && e.contains(j)) out.push_back(e.without(i).without(j));
  return out;
}

/// E_{i\j} = E_i intersected with E_j^c: the (r-1)-sets A, not containing j,
/// with A + {i} an edge and A + {j} a non-edge.
inline std::vector<Edge> difference_link(const RGraph& g, int i, int j) {
  detail::check_vertex(g, i);
  detail::check_vertex(g, j);
  if (i == j) throw VertexRangeError("difference_link needs distinct vertices");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!e.contains(i) || e.contains(j)) continue;
    Edge rest = e.without(i);
    if (!g.contains(rest.with(j))) out.push_back(std::move(rest));
  }
  return out;
}

/// Direct descendants of a sorted tuple: one coordinate lowered by one,
/// keeping the tuple strictly increasing and positive.
inline std::vector<Edge> direct_descendants(const Edge& a) {
  std::vector<Edge> out;
  std::vector<int> v(a.begin(), a.end());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const int floor = s == 0 ? 0 : v[s - 1];
    if (v[s] - 1 > floor) {
      --v[s];
      out.emplace_back(v);
      ++v[s];
    }
  }
  return out;
}

/// Left-compressed: every direct descendant of an edge is an edge. The
/// descendant relation is the transitive closure of the direct one, so this
/// is equivalent to closure under all descendants.
inline bool is_left_compressed(const RGraph& g) {
  for (const Edge& e : g.edges())
    for (const Edge& d : direct_descendants(e))
      if (!g.contains(d)) return false;
  return true;
}

/// Shift (i, j), i < j: each edge containing j but not i is moved to
/// (e - j + i) unless that edge already exists. Returns true if anything moved.
inline bool apply_shift(boost::dynamic_bitset<>& bits, int i, int j, const std::vector<Edge>& edges) {
  bool moved = false;
  const boost::dynamic_bitset<> before = bits;
  for (const Edge& e : edges) {
    if (!e.contains(j) || e.contains(i)) continue;
    const std::uint64_t target = colex_rank(e.without(j).with(i));
    if (before.test(target)) continue;
    bits.reset(colex_rank(e));
    bits.set(target);
    moved = true;
  }
  return moved;
}

/// Left-compression by repeated (i, j)-shifts in lexicographic (i, j) order
/// until no shift changes the edge set. Preserves the edge count.
inline RGraph compress(const RGraph& g) {
  const int r = g.uniformity();
  const int n = g.order();
  boost::dynamic_bitset<> bits = g.bitmap();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<Edge> edges = RGraph::from_bitmap(r, n, bits).edges();
        if (apply_shift(bits, i, j, edges)) changed = true;
      }
    }
  }
  return RGraph::from_bitmap(r, n, bits);
}

}  // namespace laglab
