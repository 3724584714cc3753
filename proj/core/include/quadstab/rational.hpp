#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadstab::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always kept in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so operator== is structural equality.
/// All arithmetic is exact; nothing in here ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    v_ = Rep(num, den);
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "p/q" or a plain decimal such as "0.25" (converted exactly).
  static Rational from_string(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rational abs() const {
    Rational r = *this;
    if (r.v_ < 0) r.v_ = -r.v_;
    return r;
  }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e != 0) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  double to_double() const { return v_.template convert_to<double>(); }

  std::string str() const { return v_.str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  Rep v_;
};

inline Rational Rational::from_string(std::string_view s) {
  std::string t(s);
  // trim
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  if (t.empty()) throw std::invalid_argument("Rational: empty string");

  if (auto slash = t.find('/'); slash != std::string::npos) {
    BigInt num(t.substr(0, slash));
    BigInt den(t.substr(slash + 1));
    return Rational(num, den);
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw std::invalid_argument("Rational: malformed decimal '" + t + "'");
    }
    BigInt num(digits);
    BigInt den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(BigInt(t));
}

}  // namespace quadstab::exact
