#include "quadstab/fixpoint.hpp"

#include <cmath>
#include <stdexcept>

namespace quadstab::fixpoint {

IterationState::IterationState(FunctionExpr base, int j, int n)
    : base_(std::move(base)), j_(j), n_(n) {
  if (j != 1 && j != -1) {
    throw std::invalid_argument("IterationState: j must be +1 or -1");
  }
  if (n < 0) {
    throw std::invalid_argument("IterationState: n must be nonnegative");
  }
}

double IterationState::operator()(double x) const {
  const int nj = n_ * j_;
  // ldexp keeps the power-of-two dilation exact.
  return std::ldexp(base_(std::ldexp(x, nj)), -2 * nj);
}

IterationState apply_T(const IterationState& state) {
  return IterationState(state.base(), state.j(), state.n() + 1);
}

ContractionVerdict contraction_check(const FunctionExpr& f, const FunctionExpr& g,
                                     int j, const RealFn& psi, double lipschitz,
                                     const GridSpec& grid, double tol) {
  if (!(lipschitz > 0.0) || !(lipschitz < 1.0)) {
    throw std::invalid_argument("contraction_check: Lipschitz constant must be in (0,1)");
  }
  if (!grid.is_dyadic()) {
    throw std::invalid_argument(
        "contraction_check: grid is not closed under dilation by 2^j "
        "(points must form a dyadic family)");
  }

  const IterationState f0(f, j, 0), g0(g, j, 0);
  const IterationState f1 = apply_T(f0), g1 = apply_T(g0);

  ContractionVerdict v{gen_metric(f1.evaluator(), g1.evaluator(), psi, grid),
                       gen_metric(f0.evaluator(), g0.evaluator(), psi, grid),
                       GenMetricValue::infinity(), false};
  v.rhs = v.d_fg.scaled(lipschitz);
  if (!v.rhs.is_finite()) {
    v.holds = true;  // L * infinity dominates everything
  } else {
    v.holds = v.d_tf_tg.is_finite() && v.d_tf_tg.value() <= v.rhs.value() + tol;
  }
  return v;
}

FixedPointResult iterate_to_fixed_point(const FunctionExpr& f, int j,
                                        const RealFn& psi, double lipschitz,
                                        const GridSpec& grid, double tol,
                                        int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_to_fixed_point: tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("iterate_to_fixed_point: max_iter must be >= 1");
  if (!(lipschitz > 0.0) || !(lipschitz < 1.0)) {
    throw std::invalid_argument("iterate_to_fixed_point: Lipschitz constant must be in (0,1)");
  }

  FixedPointResult result;
  result.diag.lipschitz = lipschitz;

  IterationState current(f, j, 0);
  for (int n = 0; n < max_iter; ++n) {
    const IterationState next = apply_T(current);
    const GenMetricValue d =
        gen_metric(current.evaluator(), next.evaluator(), psi, grid);
    result.diag.successive.push_back(d);
    if (d.is_finite() && d.value() <= tol) {
      result.converged = true;
      result.diag.n_converged = n;
      for (double x : grid.points()) result.q[x] = next(x);
      return result;
    }
    current = next;
  }
  return result;  // not converged; diagnostics carry the full distance history
}

}  // namespace quadstab::fixpoint
