#include "wbfv/integrate.hpp"

#include <string>

namespace wbfv {

ButcherTableau ButcherTableau::forward_euler() {
  ButcherTableau t;
  t.name = "euler";
  t.order = 1;
  t.a = Eigen::MatrixXd::Zero(1, 1);
  t.b = Eigen::VectorXd::Ones(1);
  t.c = Eigen::VectorXd::Zero(1);
  return t;
}

ButcherTableau ButcherTableau::ssprk43() {
  ButcherTableau t;
  t.name = "ssprk43";
  t.order = 3;
  t.a = Eigen::MatrixXd::Zero(4, 4);
  t.a(1, 0) = 0.5;
  t.a(2, 0) = 0.5;
  t.a(2, 1) = 0.5;
  t.a(3, 0) = 1.0 / 6.0;
  t.a(3, 1) = 1.0 / 6.0;
  t.a(3, 2) = 1.0 / 6.0;
  t.b.resize(4);
  t.b << 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.5;
  t.c.resize(4);
  t.c << 0.0, 0.5, 1.0, 0.5;
  return t;
}

ButcherTableau ButcherTableau::rk5() {
  ButcherTableau t;
  t.name = "dopri5";
  t.order = 5;
  t.a = Eigen::MatrixXd::Zero(6, 6);
  t.a(1, 0) = 1.0 / 5.0;
  t.a(2, 0) = 3.0 / 40.0;
  t.a(2, 1) = 9.0 / 40.0;
  t.a(3, 0) = 44.0 / 45.0;
  t.a(3, 1) = -56.0 / 15.0;
  t.a(3, 2) = 32.0 / 9.0;
  t.a(4, 0) = 19372.0 / 6561.0;
  t.a(4, 1) = -25360.0 / 2187.0;
  t.a(4, 2) = 64448.0 / 6561.0;
  t.a(4, 3) = -212.0 / 729.0;
  t.a(5, 0) = 9017.0 / 3168.0;
  t.a(5, 1) = -355.0 / 33.0;
  t.a(5, 2) = 46732.0 / 5247.0;
  t.a(5, 3) = 49.0 / 176.0;
  t.a(5, 4) = -5103.0 / 18656.0;
  t.b.resize(6);
  t.b << 35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0;
  t.c.resize(6);
  t.c << 0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0;
  return t;
}

ButcherTableau ButcherTableau::for_order(int order) {
  switch (order) {
    case 1: return forward_euler();
    case 3: return ssprk43();
    case 5: return rk5();
  }
  throw ConfigError("no time integrator for order " + std::to_string(order));
}

}  // namespace wbfv
