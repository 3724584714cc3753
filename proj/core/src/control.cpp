#include "quadstab/control.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quadstab::stability {

double power_abs(double x, double p) {
  if (p == 0.0) return 1.0;
  return std::pow(std::abs(x), p);
}

ControlFunction ControlFunction::power_type(double eps, double p) {
  if (eps < 0.0) throw std::invalid_argument("ControlFunction: eps must be >= 0");
  if (p < 0.0) throw std::invalid_argument("ControlFunction: p must be >= 0");
  if (p == 2.0) {
    throw std::invalid_argument("ControlFunction: power type requires p != 2");
  }
  return ControlFunction(Kind::PowerType, eps, p);
}

ControlFunction ControlFunction::constant(double delta) {
  if (delta < 0.0) throw std::invalid_argument("ControlFunction: delta must be >= 0");
  return ControlFunction(Kind::Constant, delta, 0.0);
}

double ControlFunction::eps() const {
  if (kind_ != Kind::PowerType) throw std::logic_error("ControlFunction: not power type");
  return param_;
}

double ControlFunction::p() const {
  if (kind_ != Kind::PowerType) throw std::logic_error("ControlFunction: not power type");
  return p_;
}

double ControlFunction::delta() const {
  if (kind_ != Kind::Constant) throw std::logic_error("ControlFunction: not constant");
  return param_;
}

double ControlFunction::operator()(double x, double y, double z) const {
  if (kind_ == Kind::Constant) return param_;
  return param_ * (power_abs(x, p_) + power_abs(y, p_) + power_abs(z, p_));
}

double ControlFunction::unit(double x, double y, double z) const {
  return with_parameter(1.0)(x, y, z);
}

double ControlFunction::psi(double x) const {
  if (kind_ == Kind::Constant) return param_;
  return param_ * power_abs(x, p_) / std::exp2(p_);
}

ControlFunction ControlFunction::with_parameter(double param) const {
  ControlFunction c = *this;
  c.param_ = param;
  return c;
}

fixpoint::RealFn psi_from_phi(const ControlFunction& control) {
  return [control](double x) { return control.psi(x); };
}

double lipschitz_for_power(double p, int j) {
  if (j != 1 && j != -1) {
    throw std::invalid_argument("lipschitz_for_power: j must be +1 or -1");
  }
  if (!((p - 2.0) * j < 0.0)) {
    throw std::invalid_argument(
        "lipschitz_for_power: requires (p-2)j < 0 (contraction fails otherwise); "
        "p = " + std::to_string(p) + ", j = " + std::to_string(j));
  }
  const double lipschitz = std::exp2((p - 2.0) * j);

  // Weight inequality self-check: 2^(-2j) psi(2^j x) = L psi(x) holds with
  // equality for the power family. Only floating rounding may separate the
  // two sides.
  for (double x : {0.25, 1.0, 3.5}) {
    const double lhs = std::ldexp(power_abs(std::ldexp(x, j), p), -2 * j);
    const double rhs = lipschitz * power_abs(x, p);
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) {
      throw std::logic_error("lipschitz_for_power: weight inequality self-check failed");
    }
  }
  return lipschitz;
}

double resolve_lipschitz(const ControlFunction& control, int j) {
  if (control.is_power()) return lipschitz_for_power(control.p(), j);
  if (j != 1) {
    throw std::invalid_argument(
        "resolve_lipschitz: constant control admits only j = +1 "
        "(the dilated control must vanish in the limit)");
  }
  return 0.25;
}

double bound_via_fixed_point(double lipschitz, int j, int c, double psi_x) {
  if (!(lipschitz > 0.0) || !(lipschitz < 1.0)) {
    throw std::invalid_argument("bound_via_fixed_point: Lipschitz constant must be in (0,1)");
  }
  const double lead = j == 1 ? lipschitz : 1.0;  // L^((j+1)/2)
  return lead / (static_cast<double>(c) * c * (1.0 - lipschitz)) * psi_x;
}

double bound_via_power_formula(double eps, double p, int j, int c, double x) {
  return j * eps * power_abs(x, p) /
         (static_cast<double>(c) * c * (4.0 - std::exp2(p)));
}

double theoretical_bound(const ControlFunction& control, int c, int j, double x) {
  if (!control.is_power()) {
    // Constant delta is the p = 0 power member with eps = delta / 3.
    return control.delta() / (9.0 * static_cast<double>(c) * c);
  }
  const double lipschitz = lipschitz_for_power(control.p(), j);
  const double via_fixed_point =
      bound_via_fixed_point(lipschitz, j, c, control.psi(x));
  const double via_power = bound_via_power_formula(control.eps(), control.p(), j, c, x);
  if (std::abs(via_fixed_point - via_power) >
      1e-12 * std::max(1.0, std::abs(via_power))) {
    throw std::logic_error("theoretical_bound: bound routes disagree");
  }
  return via_fixed_point;
}

}  // namespace quadstab::stability
