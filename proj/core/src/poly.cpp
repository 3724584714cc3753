#include "quadstab/poly.hpp"

#include <cmath>
#include <sstream>

namespace quadstab::exact {

void Poly1::normalize() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero()) {
      it = c_.erase(it);
    } else {
      ++it;
    }
  }
}

Rational Poly1::eval(const Rational& x) const {
  // Plain powers; degrees stay small enough that Horner buys nothing here.
  Rational acc(0);
  for (const auto& [d, coef] : c_) {
    acc += coef * x.pow(d);
  }
  return acc;
}

double Poly1::eval(double x) const {
  double acc = 0.0;
  for (const auto& [d, coef] : c_) {
    acc += coef.to_double() * std::pow(x, static_cast<double>(d));
  }
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  for (const auto& [d, coef] : o.c_) {
    auto [it, inserted] = c_.try_emplace(d, coef);
    if (!inserted) it->second += coef;
  }
  normalize();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  for (const auto& [d, coef] : o.c_) {
    auto [it, inserted] = c_.try_emplace(d, -coef);
    if (!inserted) it->second -= coef;
  }
  normalize();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [d, coef] : c_) coef *= s;
  return *this;
}

namespace {

void append_coeff_and_vars(std::ostringstream& out, const Rational& coeff_abs,
                           const std::string& vars) {
  if (vars.empty()) {
    out << coeff_abs.str();
    return;
  }
  if (coeff_abs == Rational(1)) {
    out << vars;
  } else {
    out << coeff_abs.str() << "*" << vars;
  }
}

std::string var_power(const char* name, unsigned e) {
  if (e == 0) return "";
  std::string s = name;
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string Poly1::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [d, coef] = *it;
    if (first) {
      if (coef.sign() < 0) out << "-";
      first = false;
    } else {
      out << (coef.sign() < 0 ? " - " : " + ");
    }
    append_coeff_and_vars(out, coef.abs(), var_power("x", d));
  }
  return out.str();
}

void Poly3::normalize() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero()) {
      it = c_.erase(it);
    } else {
      ++it;
    }
  }
}

int Poly3::total_degree() const {
  return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first.total());
}

Rational Poly3::eval(const Rational& x, const Rational& y, const Rational& z) const {
  Rational acc(0);
  for (const auto& [m, coef] : c_) {
    acc += coef * x.pow(m.i) * y.pow(m.j) * z.pow(m.k);
  }
  return acc;
}

double Poly3::eval(double x, double y, double z) const {
  double acc = 0.0;
  for (const auto& [m, coef] : c_) {
    acc += coef.to_double() * std::pow(x, m.i) * std::pow(y, m.j) * std::pow(z, m.k);
  }
  return acc;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [m, coef] : o.c_) {
    auto [it, inserted] = c_.try_emplace(m, coef);
    if (!inserted) it->second += coef;
  }
  normalize();
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [m, coef] : o.c_) {
    auto [it, inserted] = c_.try_emplace(m, -coef);
    if (!inserted) it->second -= coef;
  }
  normalize();
  return *this;
}

Poly3& Poly3::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [m, coef] : c_) coef *= s;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  std::map<Mono3, Rational> out;
  for (const auto& [ma, ca] : a.c_) {
    for (const auto& [mb, cb] : b.c_) {
      Mono3 m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
      auto [it, inserted] = out.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return Poly3(std::move(out));
}

std::string Poly3::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [m, coef] = *it;
    if (first) {
      if (coef.sign() < 0) out << "-";
      first = false;
    } else {
      out << (coef.sign() < 0 ? " - " : " + ");
    }
    std::string vars = var_power("x", m.i);
    std::string vy = var_power("y", m.j);
    std::string vz = var_power("z", m.k);
    if (!vy.empty()) vars += (vars.empty() ? "" : "*") + vy;
    if (!vz.empty()) vars += (vars.empty() ? "" : "*") + vz;
    append_coeff_and_vars(out, coef.abs(), vars);
  }
  return out.str();
}

Poly3 compose_affine(const Poly1& p, const Rational& alpha, const Rational& beta,
                     const Rational& gamma) {
  Poly3 linear;
  {
    std::map<Mono3, Rational> t;
    if (!alpha.is_zero()) t[{1, 0, 0}] = alpha;
    if (!beta.is_zero()) t[{0, 1, 0}] = beta;
    if (!gamma.is_zero()) t[{0, 0, 1}] = gamma;
    linear = Poly3(std::move(t));
  }

  Poly3 acc;
  Poly3 power = Poly3::constant(Rational(1));
  unsigned have = 0;
  for (const auto& [d, coef] : p.terms()) {
    while (have < d) {
      power = power * linear;
      ++have;
    }
    acc += coef * power;
  }
  return acc;
}

}  // namespace quadstab::exact
