#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>

#include "quadstab/poly.hpp"

namespace quadstab::funceq {

using exact::Poly1;

/// Deterministic bounded noise in [-1, 1), a pure function of (seed, x).
/// Keyed by the bit pattern of x, so dyadic grid points and their dilates
/// always reproduce the same value. Returns 0 at x = 0.
double dyadic_noise(std::uint64_t seed, double x);

/// A univariate real function f with f(0) = 0, in one of four shapes:
///   - Polynomial: exact rational polynomial with zero constant term
///   - QuadPlusPower: a*x^2 + eps0*|x|^p        (|x|^0 := 1 for x != 0)
///   - QuadPlusNoise: a*x^2 + u(x), |u| <= eta, u deterministic from seed
///   - Table: finite lookup table with exact keys
/// f(0) = 0 holds for every variant by construction.
class FunctionExpr {
 public:
  struct Polynomial {
    Poly1 p;
  };
  struct QuadPlusPower {
    double a, eps0, p;
  };
  struct QuadPlusNoise {
    double a, eta;
    std::uint64_t seed;
  };
  struct Table {
    std::map<double, double> values;
  };
  using Node = std::variant<Polynomial, QuadPlusPower, QuadPlusNoise, Table>;

  static FunctionExpr polynomial(Poly1 p);
  static FunctionExpr quad_plus_power(double a, double eps0, double p);
  static FunctionExpr quad_plus_noise(double a, double eta, std::uint64_t seed);
  static FunctionExpr table(std::map<double, double> values);

  double operator()(double x) const;

  std::function<double(double)> evaluator() const {
    return [f = *this](double x) { return f(x); };
  }

  const Node& node() const { return node_; }

  /// Compact human-readable description used in reports.
  std::string describe() const;

 private:
  explicit FunctionExpr(Node n) : node_(std::move(n)) {}
  Node node_;
};

}  // namespace quadstab::funceq
