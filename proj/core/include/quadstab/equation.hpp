#pragma once

#include <functional>
#include <vector>

#include "quadstab/function_expr.hpp"
#include "quadstab/poly.hpp"

namespace quadstab::funceq {

using exact::Poly1;
using exact::Poly3;
using exact::Rational;

/// One weighted evaluation "weight * f(ax*x + ay*y + az*z)". Linear
/// combinations of these express both sides of every equation and identity
/// handled here.
struct AffineTerm {
  Rational weight;
  Rational ax, ay, az;
};

/// Which functional equation a residual refers to.
///
/// QuadBase is the two-variable quadratic equation
///   f(x+y) + f(x-y) = 2 f(x) + 2 f(y),
/// QuadMain its three-variable dilation form with integer parameter c,
///   f(x+y+2cz) + f(x+y-2cz) + c^2 f(2x) + c^2 f(2y)
///     = 2 [ f(x+y) + c^2 f(x+z) + c^2 f(x-z) + c^2 f(y+z) + c^2 f(y-z) ],
/// admissible only for c != 0, +1, -1.
class EquationId {
 public:
  enum class Kind { QuadBase, QuadMain };

  static EquationId quad_base() { return EquationId(Kind::QuadBase, 0); }
  static EquationId quad_main(int c);

  Kind kind() const { return kind_; }
  int c() const { return c_; }

 private:
  EquationId(Kind k, int c) : kind_(k), c_(c) {}
  Kind kind_;
  int c_;
};

/// Throws std::invalid_argument unless c is an admissible dilation parameter
/// (c != 0, +1, -1).
void require_admissible_c(int c);

/// LHS - RHS of the equation as a list of weighted affine evaluations.
/// For QuadBase the z coefficient of every term is zero.
std::vector<AffineTerm> equation_terms(const EquationId& eq);

/// Residual of the three-variable equation at a point: LHS - RHS with the
/// given f. Vanishes identically iff f solves the equation.
double residual_main(const FunctionExpr& f, int c, double x, double y, double z);

/// Same residual for an arbitrary evaluator (used for linearity checks and
/// value tables).
double residual_value(const std::function<double(double)>& f, int c, double x,
                      double y, double z);

/// Exact residual of the three-variable equation for a polynomial f at a
/// rational point.
Rational residual_main_exact(const Poly1& p, int c, const Rational& x,
                             const Rational& y, const Rational& z);

/// Residual of the two-variable quadratic equation at a point.
double residual_quadratic(const FunctionExpr& f, double x, double y);
double residual_quadratic_value(const std::function<double(double)>& f, double x,
                                double y);
Rational residual_quadratic_exact(const Poly1& p, const Rational& x, const Rational& y);

/// The residual expanded exactly as a polynomial in x, y, z (y only, z absent,
/// for QuadBase). Zero polynomial iff p satisfies the equation identically.
Poly3 symbolic_residual(const Poly1& p, const EquationId& eq);

/// Basis of { p : deg(p) <= max_degree, symbolic_residual(p, eq) = 0 },
/// computed by coefficient matching and an exact nullspace. Requires
/// max_degree >= 2.
std::vector<Poly1> solution_space(const EquationId& eq, unsigned max_degree);

/// The bi-additive form B(x,y) = (f(x+y) - f(x-y)) / 4 attached to a
/// quadratic function; B(x,x) recovers f(x).
double biadditive_form(const FunctionExpr& f, double x, double y);
Rational biadditive_form_exact(const Poly1& p, const Rational& x, const Rational& y);

}  // namespace quadstab::funceq
