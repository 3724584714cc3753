#include "quadstab/metric.hpp"

#include <cmath>
#include <limits>

namespace quadstab::fixpoint {

double GenMetricValue::as_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : v_;
}

GenMetricValue gen_metric(const RealFn& g, const RealFn& h, const RealFn& psi,
                          const GridSpec& grid) {
  double sup = 0.0;
  for (double x : grid.points()) {
    const double w = psi(x);
    if (!(w >= 0.0)) {
      throw std::invalid_argument("gen_metric: psi must be nonnegative on the grid");
    }
    const double diff = std::abs(g(x) - h(x));
    if (w == 0.0) {
      if (diff > 0.0) return GenMetricValue::infinity();
      continue;
    }
    sup = std::max(sup, diff / w);
  }
  return GenMetricValue::finite(sup);
}

GenMetricValue a_priori_bound(const GenMetricValue& d_f_tf, double lipschitz) {
  if (!(lipschitz > 0.0) || !(lipschitz < 1.0)) {
    throw std::invalid_argument("a_priori_bound: Lipschitz constant must be in (0,1)");
  }
  if (!d_f_tf.is_finite()) return d_f_tf;
  return GenMetricValue::finite(d_f_tf.value() / (1.0 - lipschitz));
}

}  // namespace quadstab::fixpoint
