#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadstab/rational.hpp"

namespace quadstab::exact {

/// Sparse univariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class Poly1 {
 public:
  Poly1() = default;

  explicit Poly1(std::map<unsigned, Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static Poly1 zero() { return Poly1(); }
  static Poly1 constant(const Rational& v) { return monomial(0, v); }

  static Poly1 monomial(unsigned degree, const Rational& coeff) {
    Poly1 p;
    if (!coeff.is_zero()) p.c_[degree] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }

  Rational coeff(unsigned degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? Rational(0) : it->second;
  }

  const std::map<unsigned, Rational>& terms() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Rational& s);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Rational& s, Poly1 p) { return p *= s; }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  /// Renders in the CLI micro-grammar, e.g. "3/2*x^2 - x". Zero prints "0".
  std::string str() const;

 private:
  void normalize();
  std::map<unsigned, Rational> c_;
};

/// Monomial exponents (i, j, k) for x^i y^j z^k, ordered graded
/// lexicographically with x > y > z.
struct Mono3 {
  unsigned i = 0, j = 0, k = 0;

  unsigned total() const { return i + j + k; }

  friend bool operator==(const Mono3& a, const Mono3& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator<(const Mono3& a, const Mono3& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  }
};

/// Sparse trivariate polynomial over the rationals; carrier for the exact
/// residual of a functional equation expanded in x, y, z.
class Poly3 {
 public:
  Poly3() = default;

  explicit Poly3(std::map<Mono3, Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static Poly3 zero() { return Poly3(); }
  static Poly3 constant(const Rational& v) { return monomial({0, 0, 0}, v); }

  static Poly3 monomial(Mono3 m, const Rational& coeff) {
    Poly3 p;
    if (!coeff.is_zero()) p.c_[m] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;

  Rational coeff(const Mono3& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Rational(0) : it->second;
  }

  const std::map<Mono3, Rational>& terms() const { return c_; }

  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
  double eval(double x, double y, double z) const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& s);

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Rational& s, Poly3 p) { return p *= s; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);

  friend bool operator==(const Poly3& a, const Poly3& b) { return a.c_ == b.c_; }

  /// Terms in canonical display order: graded lexicographic, leading first.
  std::string str() const;

 private:
  void normalize();
  std::map<Mono3, Rational> c_;
};

/// Exact expansion of p(alpha*x + beta*y + gamma*z) as a trivariate polynomial.
Poly3 compose_affine(const Poly1& p, const Rational& alpha, const Rational& beta,
                     const Rational& gamma);

}  // namespace quadstab::exact
