#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "laglab/colex.hpp"
#include "laglab/rgraph.hpp"

namespace laglab {

/// All sorted tuples B != A with B[s] <= A[s] for every s (the strictly
/// smaller coordinate sum follows). Returned in colex order.
inline std::vector<Edge> descendants(const Edge& a) {
  std::vector<Edge> out;
  std::vector<int> b(a.size());
  std::function<void(std::size_t, int)> fill = [&](std::size_t s, int floor) {
    if (s == a.size()) {
      if (!std::equal(b.begin(), b.end(), a.begin())) out.emplace_back(b);
      return;
    }
    for (int v = floor + 1; v <= a[s]; ++v) {
      b[s] = v;
      fill(s + 1, v);
    }
  };
  fill(0, 0);
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

/// All sorted tuples B != A inside [t] with A[s] <= B[s] for every s.
inline std::vector<Edge> ancestors(const Edge& a, int t) {
  std::vector<Edge> out;
  if (a.empty() || a.back() > t) return out;
  std::vector<int> b(a.size());
  std::function<void(std::size_t, int)> fill = [&](std::size_t s, int floor) {
    if (s == a.size()) {
      if (!std::equal(b.begin(), b.end(), a.begin())) out.emplace_back(b);
      return;
    }
    for (int v = std::max(floor + 1, a[s]); v <= t; ++v) {
      b[s] = v;
      fill(s + 1, v);
    }
  };
  fill(0, 0);
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

/// The descendant poset on [t]^(3), packed into 64-bit masks indexed by colex
/// rank. Colex order is a linear extension of the poset (a descendant always
/// has smaller rank), which is what the enumerator relies on.
class TriplePoset {
 public:
  static constexpr int kMaxT = 8;  // C(8, 3) = 56 elements fit in one word

  explicit TriplePoset(int t) : t_(t) {
    if (t < 0 || t > kMaxT) {
      throw RefusalError("down-set enumeration supports t <= " + std::to_string(kMaxT));
    }
    size_ = static_cast<int>(binomial(t, 3));
    below_.resize(static_cast<std::size_t>(size_));
    dual_.resize(static_cast<std::size_t>(size_));
    for (int e = 0; e < size_; ++e) {
      const Edge triple = colex_unrank(3, static_cast<std::uint64_t>(e));
      std::uint64_t mask = 0;
      for (const Edge& d : direct_descendants(triple)) mask |= bit(static_cast<int>(colex_rank(d)));
      below_[static_cast<std::size_t>(e)] = mask;
      const Edge mirrored{t + 1 - triple[2], t + 1 - triple[1], t + 1 - triple[0]};
      dual_[static_cast<std::size_t>(e)] = static_cast<int>(colex_rank(mirrored));
    }
  }

  int t() const noexcept { return t_; }
  int size() const noexcept { return size_; }
  std::uint64_t full() const noexcept { return size_ == 64 ? ~std::uint64_t{0} : bit(size_) - 1; }

  /// Direct descendants of the element with colex rank e.
  std::uint64_t direct_below(int e) const { return below_[static_cast<std::size_t>(e)]; }

  bool is_down_set(std::uint64_t mask) const {
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      if (below_[static_cast<std::size_t>(e)] & ~mask) return false;
    }
    return true;
  }

  /// Image under i1 i2 i3 -> (t+1-i3)(t+1-i2)(t+1-i1), an order-reversing
  /// involution: it maps down-sets to up-sets and back.
  std::uint64_t mirror(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      out |= bit(dual_[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    return out;
  }

  /// Calls `visit(mask)` once for every down-set with exactly m elements.
  /// Stops early (and returns false) when `visit` returns false.
  template <class Visit>
  bool for_each_down_set(int m, Visit&& visit) const {
    if (m < 0 || m > size_) return true;
    if (2 * m > size_) {
      // Complements of down-sets are up-sets; mirror the smaller side.
      const std::uint64_t all = full();
      auto flipped = [&](std::uint64_t small) { return visit(all & ~mirror(small)); };
      return search(size_ - m, 0, 0, 0, flipped);
    }
    return search(m, 0, 0, 0, visit);
  }

  RGraph to_graph(std::uint64_t mask) const {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      ranks.push_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
    }
    return RGraph::from_ranks(3, t_, std::move(ranks));
  }

  std::uint64_t to_mask(const RGraph& g) const {
    std::uint64_t mask = 0;
    for (std::uint64_t rank : g.ranks()) {
      if (rank >= static_cast<std::uint64_t>(size_)) throw VertexRangeError("graph does not fit on [t]");
      mask |= bit(static_cast<int>(rank));
    }
    return mask;
  }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

  // Adds elements in increasing rank; an element may join once all of its
  // direct descendants are present, so each down-set is reached exactly once
  // (along its rank-sorted sequence).
  template <class Visit>
  bool search(int m, std::uint64_t mask, int count, int next, Visit& visit) const {
    if (count == m) return visit(mask);
    for (int e = next; size_ - e >= m - count; ++e) {
      if (below_[static_cast<std::size_t>(e)] & ~mask) continue;
      if (!search(m, mask | bit(e), count + 1, e + 1, visit)) return false;
    }
    return true;
  }

  int t_;
  int size_;
  std::vector<std::uint64_t> below_;
  std::vector<int> dual_;
};

/// Every left-compressed 3-graph on [t] with m edges, each exactly once.
/// Left-compressed 3-graphs on [t] are precisely the down-sets of the
/// descendant poset.
template <class Visit>
bool for_each_left_compressed(int t, int m, Visit&& visit) {
  const TriplePoset poset(t);
  return poset.for_each_down_set(m, [&](std::uint64_t mask) { return visit(poset.to_graph(mask)); });
}

inline std::vector<RGraph> enumerate_left_compressed(int t, int m) {
  std::vector<RGraph> out;
  for_each_left_compressed(t, m, [&](RGraph g) {
    out.push_back(std::move(g));
    return true;
  });
  return out;
}

inline std::uint64_t count_left_compressed(int t, int m) {
  const TriplePoset poset(t);
  std::uint64_t count = 0;
  poset.for_each_down_set(m, [&](std::uint64_t) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace laglab
