#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "laglab/error.hpp"

namespace laglab {

/// A legal weighting: non-negative, summing to one. Index 0 holds the weight
/// of vertex 1. The zero-length weighting is allowed for the graph on [0].
class Weighting {
 public:
  static constexpr double kSumTolerance = 1e-12;
  /// Weights at or below this count as zero when measuring the support.
  static constexpr double kSupportThreshold = 1e-10;

  Weighting() = default;

  explicit Weighting(std::vector<double> x) : x_(std::move(x)) {
    double sum = 0.0;
    for (double v : x_) {
      if (!(v >= 0.0)) throw Error("weighting has a negative or NaN entry");
      sum += v;
    }
    if (!x_.empty() && std::abs(sum - 1.0) > kSumTolerance) {
      throw Error("weighting sums to " + std::to_string(sum) + ", not 1");
    }
  }

  static Weighting uniform(int n) {
    if (n <= 0) return Weighting();
    return Weighting(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
  }

  std::size_t size() const noexcept { return x_.size(); }
  std::span<const double> values() const noexcept { return x_; }
  double operator[](std::size_t i) const { return x_[i]; }
  /// Weight of a 1-based vertex.
  double at(int vertex) const { return x_.at(static_cast<std::size_t>(vertex - 1)); }

  int support(double threshold = kSupportThreshold) const {
    int k = 0;
    for (double v : x_)
      if (v > threshold) ++k;
    return k;
  }

 private:
  std::vector<double> x_;
};

}  // namespace laglab
