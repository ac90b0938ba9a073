#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace laglab {

/// Euclidean projection of `v` onto the simplex over the coordinates where
/// `free[i]` is set; the remaining coordinates are set to zero.
inline void project_to_simplex(std::span<double> v, const std::vector<char>& free) {
  std::vector<double> sorted;
  sorted.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (free[i]) sorted.push_back(v[i]);
  if (sorted.empty()) {
    std::fill(v.begin(), v.end(), 0.0);
    return;
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = free[i] ? std::max(v[i] - theta, 0.0) : 0.0;
}

/// splitmix64: small, fully specified generator, so seeded runs reproduce
/// bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Point of the flat Dirichlet distribution over the free coordinates.
  std::vector<double> dirichlet(const std::vector<char>& free) {
    std::vector<double> out(free.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (!free[i]) continue;
      out[i] = -std::log1p(-uniform());
      total += out[i];
    }
    if (total > 0.0)
      for (double& v : out) v /= total;
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace laglab
