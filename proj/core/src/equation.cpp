#include "quadstab/equation.hpp"

#include <map>
#include <stdexcept>

#include "quadstab/matrix.hpp"

namespace quadstab::funceq {

using exact::Mono3;
using exact::RationalMatrix;

void require_admissible_c(int c) {
  if (c == 0 || c == 1 || c == -1) {
    throw std::invalid_argument(
        "equation parameter must satisfy c != 0, +1, -1; got c = " + std::to_string(c));
  }
}

EquationId EquationId::quad_main(int c) {
  require_admissible_c(c);
  return EquationId(Kind::QuadMain, c);
}

std::vector<AffineTerm> equation_terms(const EquationId& eq) {
  if (eq.kind() == EquationId::Kind::QuadBase) {
    return {
        {Rational(1), 1, 1, 0},
        {Rational(1), 1, -1, 0},
        {Rational(-2), 1, 0, 0},
        {Rational(-2), 0, 1, 0},
    };
  }
  const Rational c(eq.c());
  const Rational c2 = c * c;
  const Rational two_c = Rational(2) * c;
  return {
      {Rational(1), 1, 1, two_c},
      {Rational(1), 1, 1, -two_c},
      {c2, 2, 0, 0},
      {c2, 0, 2, 0},
      {Rational(-2), 1, 1, 0},
      {Rational(-2) * c2, 1, 0, 1},
      {Rational(-2) * c2, 1, 0, -1},
      {Rational(-2) * c2, 0, 1, 1},
      {Rational(-2) * c2, 0, 1, -1},
  };
}

double residual_value(const std::function<double(double)>& f, int c, double x,
                      double y, double z) {
  require_admissible_c(c);
  const double c2 = static_cast<double>(c) * static_cast<double>(c);
  const double lhs = f(x + y + 2.0 * c * z) + f(x + y - 2.0 * c * z) +
                     c2 * f(2.0 * x) + c2 * f(2.0 * y);
  const double rhs =
      2.0 * (f(x + y) + c2 * (f(x + z) + f(x - z) + f(y + z) + f(y - z)));
  return lhs - rhs;
}

double residual_main(const FunctionExpr& f, int c, double x, double y, double z) {
  return residual_value(f.evaluator(), c, x, y, z);
}

Rational residual_main_exact(const Poly1& p, int c, const Rational& x,
                             const Rational& y, const Rational& z) {
  require_admissible_c(c);
  Rational acc(0);
  for (const auto& t : equation_terms(EquationId::quad_main(c))) {
    acc += t.weight * p.eval(t.ax * x + t.ay * y + t.az * z);
  }
  return acc;
}

double residual_quadratic(const FunctionExpr& f, double x, double y) {
  return f(x + y) + f(x - y) - 2.0 * f(x) - 2.0 * f(y);
}

double residual_quadratic_value(const std::function<double(double)>& f, double x,
                                double y) {
  return f(x + y) + f(x - y) - 2.0 * f(x) - 2.0 * f(y);
}

Rational residual_quadratic_exact(const Poly1& p, const Rational& x, const Rational& y) {
  return p.eval(x + y) + p.eval(x - y) - Rational(2) * p.eval(x) - Rational(2) * p.eval(y);
}

Poly3 symbolic_residual(const Poly1& p, const EquationId& eq) {
  Poly3 acc;
  for (const auto& t : equation_terms(eq)) {
    acc += t.weight * exact::compose_affine(p, t.ax, t.ay, t.az);
  }
  return acc;
}

std::vector<Poly1> solution_space(const EquationId& eq, unsigned max_degree) {
  if (max_degree < 2) {
    throw std::invalid_argument("solution_space: max_degree must be >= 2");
  }

  // The residual is linear in f, so the residual of a general polynomial with
  // unknown coefficients is the coefficient-weighted sum of the residuals of
  // the monomials x^d. Each trivariate monomial of that sum yields one linear
  // constraint on the unknowns.
  std::vector<Poly3> monomial_residuals;
  monomial_residuals.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    monomial_residuals.push_back(
        symbolic_residual(Poly1::monomial(d, Rational(1)), eq));
  }

  std::map<Mono3, std::size_t> row_index;
  for (const auto& r : monomial_residuals) {
    for (const auto& [m, coef] : r.terms()) {
      row_index.try_emplace(m, row_index.size());
    }
  }

  RationalMatrix m(row_index.size(), max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& [mono, coef] : monomial_residuals[d].terms()) {
      m.at(row_index.at(mono), d) = coef;
    }
  }

  std::vector<Poly1> basis;
  for (const auto& v : exact::nullspace(m)) {
    std::map<unsigned, Rational> coeffs;
    for (unsigned d = 0; d <= max_degree; ++d) {
      if (!v[d].is_zero()) coeffs[d] = v[d];
    }
    basis.emplace_back(std::move(coeffs));
  }
  return basis;
}

double biadditive_form(const FunctionExpr& f, double x, double y) {
  return 0.25 * (f(x + y) - f(x - y));
}

Rational biadditive_form_exact(const Poly1& p, const Rational& x, const Rational& y) {
  return (p.eval(x + y) - p.eval(x - y)) / Rational(4);
}

}  // namespace quadstab::funceq
