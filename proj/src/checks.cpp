#include "wbfv/harness.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace wbfv {
namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

CheckResult contact_check(FluxKind kind, const EosModel& eos, std::uint64_t seed) {
  FluxOptions opt;
  opt.kind = kind;
  const ContactReport r = contact_property_check(opt, eos, 1000, seed, 1e-13);
  return {"contact property " + flux_name(kind) + " / " + eos.name(), r.passed(),
          std::to_string(r.failures) + " failures of " + std::to_string(r.trials) +
              ", max deviation " + sci(r.max_deviation)};
}

// Mean conservation on random data and exact reproduction of polynomials of
// the sub-stencil degree, for which every candidate is exact.
CheckResult cweno_check(int order, std::mt19937_64& rng) {
  const Cweno1D cw(order);
  const int r = cw.radius(), w = 2 * r + 1;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double mean_dev = 0.0, poly_dev = 0.0;
  const GaussRule rule(5);
  for (int t = 0; t < 200; ++t) {
    const double dx = std::pow(10.0, -3.0 * std::abs(u(rng)));
    std::vector<double> avg(w);
    for (double& a : avg) a = 1.0 + u(rng);
    const Poly1d p = cw.reconstruct(avg, 0.3, dx);
    mean_dev = std::max(mean_dev, std::abs(p.average(0.3 - 0.5 * dx, 0.3 + 0.5 * dx) - avg[r]));

    double c[3] = {u(rng), u(rng), u(rng)};
    auto exact = [&](double x) {
      double v = 0.0, xp = 1.0;
      for (int k = 0; k <= r; ++k, xp *= x) v += c[k] * xp;
      return v;
    };
    for (int k = -r; k <= r; ++k) avg[k + r] = rule.average(exact, (k)*dx, dx);
    const Poly1d q = cw.reconstruct(avg, 0.0, dx);
    for (int a = 0; a < rule.size(); ++a) {
      const double x = rule.node(a) * dx;
      poly_dev = std::max(poly_dev, std::abs(q(x) - exact(x)));
    }
  }
  const bool ok = mean_dev <= 1e-13 && poly_dev <= 1e-12;
  return {"cweno" + std::to_string(order) + " mean and polynomial reproduction", ok,
          "mean " + sci(mean_dev) + ", polynomial " + sci(poly_dev)};
}

CheckResult eos_check(const EosModel& eos, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double round = 0.0, deriv = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const double rho = std::exp(u(rng)), p = std::exp(u(rng));
    const double eps = eos.internal_energy(rho, p);
    round = std::max(round, std::abs(eos.pressure(rho, eps) - p) / p);
    const double h = 1e-6 * p;
    const double fd = (eos.internal_energy(rho, p + h) - eos.internal_energy(rho, p - h)) / (2.0 * h);
    deriv = std::max(deriv, std::abs(fd - eos.deps_dp(rho, p)) / std::abs(eos.deps_dp(rho, p)));
  }
  return {"eos round trip and deps_dp / " + eos.name(), round <= 1e-12 && deriv <= 1e-6,
          "round trip " + sci(round) + ", derivative " + sci(deriv)};
}

LocalSource1D random_source(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double dx = 0.05;
  const int r = (order - 1) / 2;
  const Poly1d rho = Poly1d::from_coeffs({1.0 + 0.3 * u(rng), 0.05 * u(rng), 0.01 * u(rng)}, 0.4, dx);
  const Poly1d g = Poly1d::from_coeffs({-5.0 + u(rng), 0.1 * u(rng), 0.01 * u(rng)}, 0.4, dx);
  return build_source_la(rho, g, r, 0.4, dx);
}

CheckResult anchor_check(std::mt19937_64& rng) {
  const EosModel ideal = EosModel::ideal(1.4);
  const GaussRule rule(3);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  double dev = 0.0;
  for (int t = 0; t < 200; ++t) {
    const LocalSource1D s = random_source(rng, 3);
    const double eps_hat = u(rng);
    const double closed = anchor_pressure_ideal(s, eps_hat, ideal.gamma(), rule);
    const double newton = anchor_pressure_newton(s, eps_hat, s.density(0, s.center()), ideal, rule).p0;
    dev = std::max(dev, std::abs(newton - closed) / std::abs(closed));
  }
  return {"newton anchor matches the ideal-gas closed form", dev <= 1e-12, "max relative deviation " + sci(dev)};
}

CheckResult monotonicity_check(const EosModel& eos, std::mt19937_64& rng) {
  const GaussRule rule(3);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    EquilibriumProfile1D prof{0, random_source(rng, 3), u(rng)};
    if (!monotonicity_probe(prof, eos, rule)) ++failures;
  }
  return {"anchor equation monotone / " + eos.name(), failures == 0, std::to_string(failures) + " failures"};
}

CheckResult quadrature_check() {
  double dev = 0.0;
  for (int n = 1; n <= GaussRule::kMaxPoints; ++n) {
    const auto nodes = gauss_legendre(n, -0.3, 1.1);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double acc = 0.0;
      for (const auto& q : nodes) acc += q.weight * std::pow(q.node, d);
      const double exact = (std::pow(1.1, d + 1) - std::pow(-0.3, d + 1)) / (d + 1);
      dev = std::max(dev, std::abs(acc - exact));
    }
  }
  return {"gauss-legendre exact through degree 2n-1", dev <= 1e-13, "max deviation " + sci(dev)};
}

double ode_error(const ButcherTableau& tab, int steps) {
  const double dt = 1.0 / steps;
  double y = 1.0, t = 0.0;
  for (int k = 0; k < steps; ++k, t += dt)
    y = rk_step_scalar(y, t, tab, dt, [](double tt, double yy) { return -yy + std::cos(tt); });
  const double exact = 0.5 * std::exp(-1.0) + 0.5 * (std::cos(1.0) + std::sin(1.0));
  return std::abs(y - exact);
}

CheckResult rk_check(const ButcherTableau& tab) {
  const int base = tab.order == 5 ? 4 : 16;
  const double rate = std::log2(ode_error(tab, base) / ode_error(tab, 2 * base));
  return {"measured order of " + tab.name, std::abs(rate - tab.order) <= 0.15, "rate " + std::to_string(rate)};
}

}  // namespace

std::vector<CheckResult> run_property_checks(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const EosModel ideal = EosModel::ideal(1.4), rad = EosModel::radiation(1.4);
  std::vector<CheckResult> out;
  for (FluxKind k : {FluxKind::Roe, FluxKind::Hllc})
    for (const EosModel* e : {&ideal, &rad}) out.push_back(contact_check(k, *e, seed));
  for (int order : {1, 3, 5}) out.push_back(cweno_check(order, rng));
  out.push_back(eos_check(ideal, rng));
  out.push_back(eos_check(rad, rng));
  out.push_back(anchor_check(rng));
  out.push_back(monotonicity_check(ideal, rng));
  out.push_back(monotonicity_check(rad, rng));
  out.push_back(quadrature_check());
  out.push_back(rk_check(ButcherTableau::ssprk43()));
  out.push_back(rk_check(ButcherTableau::rk5()));
  return out;
}

}  // namespace wbfv
