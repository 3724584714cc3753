#pragma once

#include <map>
#include <vector>

#include "quadstab/function_expr.hpp"
#include "quadstab/metric.hpp"

namespace quadstab::fixpoint {

using funceq::FunctionExpr;

/// The n-th iterate of the dilation operator (T g)(x) = 2^(-2j) g(2^j x)
/// applied to a base function, evaluated lazily:
///   (T^n f)(x) = 2^(-2nj) f(2^(nj) x).
/// No resampling ever happens; every evaluation goes straight to the base
/// expression, so dilation introduces no interpolation error.
class IterationState {
 public:
  IterationState(FunctionExpr base, int j, int n = 0);

  int j() const { return j_; }
  int n() const { return n_; }
  const FunctionExpr& base() const { return base_; }

  double operator()(double x) const;

  RealFn evaluator() const {
    return [s = *this](double x) { return s(x); };
  }

 private:
  FunctionExpr base_;
  int j_;
  int n_;
};

/// One application of T: increments the iteration count.
IterationState apply_T(const IterationState& state);

/// Per-iteration successive distances d(T^n f, T^(n+1) f) plus convergence
/// bookkeeping. Once finite, the sequence is non-increasing (contraction).
struct FixedPointDiagnostics {
  std::vector<GenMetricValue> successive;  // index n holds d(T^n f, T^(n+1) f)
  int n_converged = -1;                    // first n with distance <= tol; -1 if none
  double lipschitz = 0.0;
};

struct ContractionVerdict {
  GenMetricValue d_tf_tg;      // d(Tf, Tg)
  GenMetricValue d_fg;         // d(f, g)
  GenMetricValue rhs;          // L * d(f, g)
  bool holds = false;
};

/// Verifies the contraction inequality d(Tf, Tg) <= L d(f, g) + tol on the
/// grid. Requires 0 < L < 1 and a dyadic grid (closure under doubling and
/// halving, so dilated evaluations stay exactly representable).
ContractionVerdict contraction_check(const FunctionExpr& f, const FunctionExpr& g,
                                     int j, const RealFn& psi, double lipschitz,
                                     const GridSpec& grid, double tol = 1e-12);

struct FixedPointResult {
  bool converged = false;
  /// Fixed point values on the grid (empty when not converged; a
  /// non-convergent run never fabricates a limit).
  std::map<double, double> q;
  FixedPointDiagnostics diag;
};

/// Picard iteration of T from f until d(T^n f, T^(n+1) f) <= tol or max_iter
/// is exhausted. Requires tol > 0, max_iter >= 1, 0 < L < 1.
FixedPointResult iterate_to_fixed_point(const FunctionExpr& f, int j,
                                        const RealFn& psi, double lipschitz,
                                        const GridSpec& grid, double tol,
                                        int max_iter);

}  // namespace quadstab::fixpoint
