#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "laglab/error.hpp"
#include "laglab/rgraph.hpp"
#include "laglab/weighting.hpp"

namespace laglab {

/// The edge polynomial sum over edges of prod x_v, compiled to a flat
/// 0-based vertex table for repeated evaluation.
class EdgePolynomial {
 public:
  explicit EdgePolynomial(const RGraph& g) : r_(g.uniformity()), n_(g.order()) {
    vertices_.reserve(g.size() * static_cast<std::size_t>(r_));
    for (const Edge& e : g.edges())
      for (int v : e) vertices_.push_back(v - 1);
  }

  int uniformity() const noexcept { return r_; }
  int dimension() const noexcept { return n_; }
  std::size_t terms() const noexcept { return r_ == 0 ? 0 : vertices_.size() / static_cast<std::size_t>(r_); }

  double value(std::span<const double> x) const {
    double total = 0.0;
    for (std::size_t base = 0; base < vertices_.size(); base += static_cast<std::size_t>(r_)) {
      double p = 1.0;
      for (int s = 0; s < r_; ++s) p *= x[static_cast<std::size_t>(vertices_[base + static_cast<std::size_t>(s)])];
      total += p;
    }
    return total;
  }

  /// grad[i] = lambda(E_i, x), the partial derivative in x_i.
  void gradient(std::span<const double> x, std::span<double> grad) const {
    std::fill(grad.begin(), grad.end(), 0.0);
    const auto r = static_cast<std::size_t>(r_);
    for (std::size_t base = 0; base < vertices_.size(); base += r) {
      for (std::size_t s = 0; s < r; ++s) {
        double p = 1.0;
        for (std::size_t u = 0; u < r; ++u)
          if (u != s) p *= x[static_cast<std::size_t>(vertices_[base + u])];
        grad[static_cast<std::size_t>(vertices_[base + s])] += p;
      }
    }
  }

  /// H(i, j) = lambda(E_ij, x); the diagonal is zero (multilinear).
  Eigen::MatrixXd hessian(std::span<const double> x) const {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_, n_);
    const auto r = static_cast<std::size_t>(r_);
    for (std::size_t base = 0; base < vertices_.size(); base += r) {
      for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t u = s + 1; u < r; ++u) {
          double p = 1.0;
          for (std::size_t w = 0; w < r; ++w)
            if (w != s && w != u) p *= x[static_cast<std::size_t>(vertices_[base + w])];
          const int i = vertices_[base + s];
          const int j = vertices_[base + u];
          h(i, j) += p;
          h(j, i) += p;
        }
      }
    }
    return h;
  }

 private:
  int r_;
  int n_;
  std::vector<int> vertices_;
};

/// Sum over the sets of a family of the product of their weights; the empty
/// set contributes 1.
inline double family_value(const std::vector<Edge>& sets, std::span<const double> x) {
  double total = 0.0;
  for (const Edge& a : sets) {
    double p = 1.0;
    for (int v : a) p *= x[static_cast<std::size_t>(v - 1)];
    total += p;
  }
  return total;
}

/// lambda(G, x). `x` may be longer than n; extra entries are ignored.
inline double evaluate(const RGraph& g, std::span<const double> x) {
  if (x.size() < static_cast<std::size_t>(g.order())) {
    throw DimensionError("weighting has " + std::to_string(x.size()) + " entries, graph needs " +
                         std::to_string(g.order()));
  }
  return EdgePolynomial(g).value(x);
}

inline double evaluate(const RGraph& g, const Weighting& x) { return evaluate(g, x.values()); }

/// lambda(E_i, x), equal to the partial derivative of lambda(G, x) in x_i.
inline double link_value(const RGraph& g, int i, std::span<const double> x) {
  if (x.size() < static_cast<std::size_t>(g.order())) throw DimensionError("weighting shorter than n");
  return family_value(link(g, i), x);
}

inline double link_value(const RGraph& g, int i, const Weighting& x) { return link_value(g, i, x.values()); }

}  // namespace laglab
