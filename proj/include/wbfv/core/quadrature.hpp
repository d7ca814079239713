#pragma once

#include <array>
#include <utility>
#include <vector>

namespace wbfv {

struct QuadNode {
  double node;
  double weight;
};

/// Gauss-Legendre rule with `order` nodes on [a, b]; order in 1..5.
std::vector<QuadNode> gauss_legendre(int order, double a, double b);

/// Gauss-Legendre rule on the reference cell [-1/2, 1/2] with unit total weight.
class GaussRule {
 public:
  static constexpr int kMaxPoints = 5;

  explicit GaussRule(int points);

  int size() const { return n_; }
  double node(int k) const { return nodes_[k]; }
  double weight(int k) const { return weights_[k]; }

  /// Mean of f over [center - h/2, center + h/2].
  template <typename F>
  double average(F&& f, double center, double h) const {
    double acc = 0.0;
    for (int k = 0; k < n_; ++k) acc += weights_[k] * f(center + h * nodes_[k]);
    return acc;
  }

 private:
  int n_;
  std::array<double, kMaxPoints> nodes_{};
  std::array<double, kMaxPoints> weights_{};
};

}  // namespace wbfv
