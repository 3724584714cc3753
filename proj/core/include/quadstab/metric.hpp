#pragma once

#include <functional>
#include <stdexcept>

#include "quadstab/grid.hpp"

namespace quadstab::fixpoint {

/// Value of a generalized metric: a nonnegative real or infinity. Infinity is
/// a first-class tagged state, never an overflow sentinel, because the fixed
/// point alternative's dichotomy ("all successive distances infinite, or...")
/// must be representable and testable.
class GenMetricValue {
 public:
  static GenMetricValue finite(double v) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("GenMetricValue: finite value must be >= 0");
    }
    return GenMetricValue(v, false);
  }
  static GenMetricValue infinity() { return GenMetricValue(0.0, true); }

  bool is_finite() const { return !infinite_; }

  double value() const {
    if (infinite_) throw std::logic_error("GenMetricValue: infinite");
    return v_;
  }

  /// Finite value, or +inf as a double (for display only).
  double as_double() const;

  GenMetricValue scaled(double factor) const {
    if (!(factor >= 0.0)) {
      throw std::invalid_argument("GenMetricValue: scale factor must be >= 0");
    }
    return infinite_ ? *this : finite(v_ * factor);
  }

  friend GenMetricValue operator+(const GenMetricValue& a, const GenMetricValue& b) {
    if (!a.is_finite() || !b.is_finite()) return infinity();
    return finite(a.v_ + b.v_);
  }

  friend bool operator==(const GenMetricValue& a, const GenMetricValue& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator<(const GenMetricValue& a, const GenMetricValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const GenMetricValue& a, const GenMetricValue& b) {
    return a < b || a == b;
  }

 private:
  GenMetricValue(double v, bool inf) : v_(v), infinite_(inf) {}
  double v_;
  bool infinite_;
};

using RealFn = std::function<double(double)>;

/// Weighted generalized distance between two functions over the grid:
/// the smallest K with |g(x) - h(x)| <= K * psi(x) at every grid point,
/// realized as sup |g - h| / psi. Yields infinity when psi vanishes at a
/// point where g and h differ; a vanishing psi where they agree imposes no
/// constraint. The grid never contains the origin, where both functions
/// vanish by the f(0) = 0 convention.
GenMetricValue gen_metric(const RealFn& g, const RealFn& h, const RealFn& psi,
                          const GridSpec& grid);

/// The a-priori distance bound from the fixed point alternative:
/// d(y, y*) <= d(y, Ty) / (1 - L). Maps infinity to infinity.
/// Requires 0 < L < 1.
GenMetricValue a_priori_bound(const GenMetricValue& d_f_tf, double lipschitz);

}  // namespace quadstab::fixpoint
