#include "wbfv/core/quadrature.hpp"

#include "wbfv/core/types.hpp"

#include <cmath>
#include <string>

namespace wbfv {
namespace {

struct RefRule {
  int n;
  double x[5];
  double w[5];
};

// Nodes and weights on [-1, 1].
const RefRule kRules[5] = {
    {1, {0.0}, {2.0}},
    {2, {-0.57735026918962576451, 0.57735026918962576451}, {1.0, 1.0}},
    {3,
     {-0.77459666924148337704, 0.0, 0.77459666924148337704},
     {0.55555555555555555556, 0.88888888888888888889, 0.55555555555555555556}},
    {4,
     {-0.86113631159405257522, -0.33998104358485626480, 0.33998104358485626480, 0.86113631159405257522},
     {0.34785484513745385737, 0.65214515486254614263, 0.65214515486254614263, 0.34785484513745385737}},
    {5,
     {-0.90617984593866399280, -0.53846931010568309104, 0.0, 0.53846931010568309104, 0.90617984593866399280},
     {0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889, 0.47862867049936646804,
      0.23692688505618908751}},
};

const RefRule& reference_rule(int order) {
  if (order < 1 || order > 5) throw ConfigError("unsupported Gauss-Legendre order " + std::to_string(order));
  return kRules[order - 1];
}

}  // namespace

std::vector<QuadNode> gauss_legendre(int order, double a, double b) {
  const RefRule& r = reference_rule(order);
  if (!(b > a)) throw ConfigError("quadrature interval must satisfy b > a");
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<QuadNode> out(r.n);
  for (int k = 0; k < r.n; ++k) out[k] = {mid + half * r.x[k], half * r.w[k]};
  return out;
}

GaussRule::GaussRule(int points) : n_(points) {
  const RefRule& r = reference_rule(points);
  for (int k = 0; k < n_; ++k) {
    nodes_[k] = 0.5 * r.x[k];
    weights_[k] = 0.5 * r.w[k];
  }
}

}  // namespace wbfv
