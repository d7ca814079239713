#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace wbfv {

/// Conserved state (rho, rho*u[, rho*v], E) in Dim space dimensions.
template <typename T, int Dim>
using StateT = Eigen::Matrix<T, Dim + 2, 1>;

using State1 = StateT<double, 1>;
using State2 = StateT<double, 2>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EosError : public Error {
 public:
  EosError(const std::string& what, double rho, double value)
      : Error(what + " (rho=" + std::to_string(rho) + ", value=" + std::to_string(value) + ")"),
        rho_(rho),
        value_(value) {}
  double rho() const { return rho_; }
  double value() const { return value_; }

 private:
  double rho_;
  double value_;
};

class EquilibriumError : public Error {
 public:
  EquilibriumError(const std::string& what, int cell)
      : Error(what + " (cell " + std::to_string(cell) + ")"), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

class FluxError : public Error {
 public:
  using Error::Error;
};

class StepError : public Error {
 public:
  using Error::Error;
};

}  // namespace wbfv
