#pragma once

#include <functional>

#include "quadstab/metric.hpp"

namespace quadstab::stability {

/// |x|^p with the convention |x|^0 := 1 for every x, including x = 0. The
/// convention makes the constant control the p = 0 member of the power
/// family at the control level; ratio-based metrics exclude the origin
/// regardless.
double power_abs(double x, double p);

/// Control function phi(x,y,z) dominating the equation residual:
///   PowerType:  phi = eps * (|x|^p + |y|^p + |z|^p),  p >= 0, p != 2
///   Constant:   phi = delta
class ControlFunction {
 public:
  enum class Kind { PowerType, Constant };

  static ControlFunction power_type(double eps, double p);
  static ControlFunction constant(double delta);

  Kind kind() const { return kind_; }
  bool is_power() const { return kind_ == Kind::PowerType; }

  double eps() const;    // PowerType only
  double p() const;      // PowerType only
  double delta() const;  // Constant only

  /// The defining parameter (eps or delta).
  double parameter() const { return param_; }

  /// phi(x, y, z).
  double operator()(double x, double y, double z) const;

  /// The family member with parameter 1, used when fitting the parameter.
  double unit(double x, double y, double z) const;

  /// Derived weight for the generalized metric, psi(x) = phi(x/2, 0, 0):
  ///   PowerType: eps * |x|^p / 2^p   (the vanished y, z slots drop out;
  ///                                   at p = 0 this is the single term eps)
  ///   Constant:  delta
  double psi(double x) const;

  ControlFunction with_parameter(double param) const;

 private:
  ControlFunction(Kind k, double param, double p) : kind_(k), param_(param), p_(p) {}
  Kind kind_;
  double param_;  // eps or delta
  double p_ = 0.0;
};

/// psi as a standalone evaluator, for the metric machinery.
fixpoint::RealFn psi_from_phi(const ControlFunction& control);

/// Contraction constant of the dilation operator under a power-type weight:
/// L = 2^((p-2) j). Requires (p-2) j < 0, which is exactly L < 1; otherwise
/// throws. Self-checks the weight inequality psi(x) <= L * 2^(2j) * psi(x / 2^j)
/// (an equality for this family) at sample points.
double lipschitz_for_power(double p, int j);

/// Resolves the contraction constant for either control family. For the
/// constant family the branch must be j = +1 (the p = 0 case), giving 1/4.
double resolve_lipschitz(const ControlFunction& control, int j);

/// Error bound via the fixed point route: L^((j+1)/2) / (c^2 (1-L)) * psi_x.
double bound_via_fixed_point(double lipschitz, int j, int c, double psi_x);

/// The same bound in closed form for the power family:
/// j * eps * |x|^p / (c^2 (4 - 2^p)). The sign factor j keeps the value
/// positive on both branches.
double bound_via_power_formula(double eps, double p, int j, int c, double x);

/// Certified pointwise bound on |f(x) - Q(x)| for a control family. For the
/// power family both closed forms above are computed and cross-asserted
/// (relative 1e-12); the constant family routes through its p = 0 power
/// surrogate eps = delta/3, yielding delta / (9 c^2).
double theoretical_bound(const ControlFunction& control, int c, int j, double x);

}  // namespace quadstab::stability
