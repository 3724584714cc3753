#include "quadstab/function_expr.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quadstab::funceq {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

double dyadic_noise(std::uint64_t seed, double x) {
  if (x == 0.0) return 0.0;
  const std::uint64_t key = splitmix64(splitmix64(seed) ^ std::bit_cast<std::uint64_t>(x));
  const double unit = static_cast<double>(key >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * unit - 1.0;
}

FunctionExpr FunctionExpr::polynomial(Poly1 p) {
  if (!p.coeff(0).is_zero()) {
    throw std::invalid_argument("FunctionExpr: polynomial must vanish at 0");
  }
  return FunctionExpr(Polynomial{std::move(p)});
}

FunctionExpr FunctionExpr::quad_plus_power(double a, double eps0, double p) {
  if (eps0 < 0.0 || p < 0.0) {
    throw std::invalid_argument("FunctionExpr: eps0 and p must be nonnegative");
  }
  return FunctionExpr(QuadPlusPower{a, eps0, p});
}

FunctionExpr FunctionExpr::quad_plus_noise(double a, double eta, std::uint64_t seed) {
  if (eta < 0.0) {
    throw std::invalid_argument("FunctionExpr: eta must be nonnegative");
  }
  return FunctionExpr(QuadPlusNoise{a, eta, seed});
}

FunctionExpr FunctionExpr::table(std::map<double, double> values) {
  if (auto it = values.find(0.0); it != values.end() && it->second != 0.0) {
    throw std::invalid_argument("FunctionExpr: table value at 0 must be 0");
  }
  values[0.0] = 0.0;
  return FunctionExpr(Table{std::move(values)});
}

double FunctionExpr::operator()(double x) const {
  if (x == 0.0) return 0.0;
  return std::visit(
      [x](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return n.p.eval(x);
        } else if constexpr (std::is_same_v<T, QuadPlusPower>) {
          const double pert = n.p == 0.0 ? 1.0 : std::pow(std::abs(x), n.p);
          return n.a * x * x + n.eps0 * pert;
        } else if constexpr (std::is_same_v<T, QuadPlusNoise>) {
          return n.a * x * x + n.eta * dyadic_noise(n.seed, x);
        } else {
          auto it = n.values.find(x);
          if (it == n.values.end()) {
            throw std::out_of_range("FunctionExpr: table has no entry at requested point");
          }
          return it->second;
        }
      },
      node_);
}

std::string FunctionExpr::describe() const {
  std::ostringstream out;
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          out << "poly(" << n.p.str() << ")";
        } else if constexpr (std::is_same_v<T, QuadPlusPower>) {
          out << "quadpow(" << n.a << "," << n.eps0 << "," << n.p << ")";
        } else if constexpr (std::is_same_v<T, QuadPlusNoise>) {
          out << "quadnoise(" << n.a << "," << n.eta << "," << n.seed << ")";
        } else {
          out << "table[" << n.values.size() << " points]";
        }
      },
      node_);
  return out.str();
}

}  // namespace quadstab::funceq
