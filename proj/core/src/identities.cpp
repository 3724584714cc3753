#include "quadstab/identities.hpp"

#include <stdexcept>

namespace quadstab::funceq {

using exact::Poly3;

namespace {

[[noreturn]] void reject(const std::string& label, const std::string& what) {
  throw std::invalid_argument("identity " + label + ": " + what);
}

int need(const std::optional<int>& v, const char* pname, const std::string& label) {
  if (!v) reject(label, std::string("missing parameter ") + pname);
  return *v;
}

}  // namespace

std::string IdentityId::label() const {
  switch (name) {
    case IdentityName::I2_1: return "2.1";
    case IdentityName::I2_2: return "2.2";
    case IdentityName::I2_3: return "2.3";
    case IdentityName::I2_4: return "2.4";
    case IdentityName::I2_8: return "2.8";
    case IdentityName::I2_9: return "2.9";
    case IdentityName::I2_20: return "2.20";
    case IdentityName::I2_21: return "2.21";
    case IdentityName::I2_22: return "2.22";
    case IdentityName::I2_23: return "2.23";
    case IdentityName::I2_24: return "2.24";
    case IdentityName::I2_28: return "2.28";
  }
  throw std::logic_error("unreachable identity name");
}

IdentityName IdentityId::name_from_label(const std::string& label) {
  if (label == "2.1") return IdentityName::I2_1;
  if (label == "2.2") return IdentityName::I2_2;
  if (label == "2.3") return IdentityName::I2_3;
  if (label == "2.4") return IdentityName::I2_4;
  if (label == "2.8") return IdentityName::I2_8;
  if (label == "2.9") return IdentityName::I2_9;
  if (label == "2.20") return IdentityName::I2_20;
  if (label == "2.21") return IdentityName::I2_21;
  if (label == "2.22") return IdentityName::I2_22;
  if (label == "2.23") return IdentityName::I2_23;
  if (label == "2.24") return IdentityName::I2_24;
  if (label == "2.28") return IdentityName::I2_28;
  throw std::invalid_argument("unknown identity label '" + label + "'");
}

IdentityId IdentityId::make(IdentityName name, std::optional<int> a,
                            std::optional<int> b, std::optional<int> c,
                            std::optional<int> k) {
  IdentityId id{name, a, b, c, k};
  const std::string label = id.label();

  auto check_a_nonzero = [&](int v) {
    if (v == 0) reject(label, "requires a != 0");
  };
  auto check_a_not_unit = [&](int v) {
    if (v == 1 || v == -1) reject(label, "requires a != +1, -1");
  };
  auto check_pair = [&](int av, int bv) {
    check_a_nonzero(av);
    if (bv == 0) reject(label, "requires b != 0");
    if (av == bv || av == -bv) reject(label, "requires a != +b, -b");
  };

  switch (name) {
    case IdentityName::I2_1:
    case IdentityName::I2_2:
    case IdentityName::I2_3:
      break;
    case IdentityName::I2_4:
      check_a_nonzero(need(a, "a", label));
      check_a_not_unit(*a);
      break;
    case IdentityName::I2_8:
    case IdentityName::I2_9:
      check_pair(need(a, "a", label), need(b, "b", label));
      break;
    case IdentityName::I2_20:
      check_pair(need(a, "a", label), need(b, "b", label));
      check_a_not_unit(*a);
      break;
    case IdentityName::I2_21:
    case IdentityName::I2_22:
    case IdentityName::I2_24:
    case IdentityName::I2_28:
      require_admissible_c(need(c, "c", label));
      break;
    case IdentityName::I2_23:
      require_admissible_c(need(c, "c", label));
      if (need(k, "k", label) == 0) reject(label, "requires k != 0");
      break;
  }
  return id;
}

IdentitySides identity_sides(const IdentityId& id) {
  const Rational one(1), two(2);
  switch (id.name) {
    case IdentityName::I2_1:
      return {{{one, 2, 1, 0}, {one, 2, -1, 0}},
              {{Rational(8), 1, 0, 0}, {two, 0, 1, 0}}};
    case IdentityName::I2_2:
      return {{{one, 2, 1, 0}, {one, 2, -1, 0}},
              {{one, 1, 1, 0}, {one, 1, -1, 0}, {Rational(6), 1, 0, 0}}};
    case IdentityName::I2_3:
      return {{{one, 3, 1, 0}, {one, 3, -1, 0}},
              {{one, 1, 1, 0}, {one, 1, -1, 0}, {Rational(16), 1, 0, 0}}};
    case IdentityName::I2_4: {
      const Rational a(*id.a);
      return {{{one, a, 1, 0}, {one, a, -1, 0}},
              {{one, 1, 1, 0}, {one, 1, -1, 0}, {two * (a * a - one), 1, 0, 0}}};
    }
    case IdentityName::I2_8: {
      const Rational a(*id.a), b(*id.b);
      return {{{one, a, b, 0}, {one, a, -b, 0}},
              {{b * b, 1, 1, 0},
               {b * b, 1, -1, 0},
               {two * (a * a - b * b), 1, 0, 0}}};
    }
    case IdentityName::I2_9: {
      const Rational a(*id.a), b(*id.b);
      return {{{one, a + b, a - b, 0}, {one, a - b, a + b, 0}},
              {{Rational(4) * b * b, 1, 0, 0},
               {Rational(4) * b * b, 0, 1, 0},
               {two * (a * a - b * b), 1, 1, 0}}};
    }
    case IdentityName::I2_20: {
      const Rational a(*id.a), b(*id.b);
      const Rational ab2 = a * a * b * b;
      return {{{one, 1, 1, two * a * b}, {one, 1, 1, -two * a * b}},
              {{two, 1, 1, 0},
               {two * ab2, 1, 0, 1},
               {two * ab2, 1, 0, -1},
               {two * ab2, 0, 1, 1},
               {two * ab2, 0, 1, -1},
               {Rational(-4) * ab2, 1, 0, 0},
               {Rational(-4) * ab2, 0, 1, 0}}};
    }
    case IdentityName::I2_21: {
      const Rational c(*id.c);
      return {{{c * c, 0, 0, c + one}, {c * c, 0, 0, c - one}},
              {{two * (c * c + one), 0, 0, c}}};
    }
    case IdentityName::I2_22: {
      const Rational c(*id.c);
      return {{{c * c, 0, 0, c + two}, {c * c, 0, 0, c - two}},
              {{two * (c * c + Rational(4)), 0, 0, c}}};
    }
    case IdentityName::I2_23: {
      const Rational c(*id.c), k(*id.k);
      return {{{c * c, 0, 0, c + k}, {c * c, 0, 0, c - k}},
              {{two * (c * c + k * k), 0, 0, c}}};
    }
    case IdentityName::I2_24: {
      const Rational c(*id.c);
      const Rational c2 = c * c;
      return {{{one, 1, 0, two * c}, {one, 1, 0, -two * c}},
              {{two * c2, 1, 0, 1},
               {two * c2, 1, 0, -1},
               {Rational(4) * c2, 0, 0, 1},
               {two * (one - two * c2), 1, 0, 0}}};
    }
    case IdentityName::I2_28: {
      const Rational c(*id.c);
      const Rational w = Rational(2) * (c * c - Rational(1));
      return {{{w, 1, 0, 1}, {w, 1, 0, -1}},
              {{two * w, 1, 0, 0}, {two * w, 0, 0, 1}}};
    }
  }
  throw std::logic_error("unreachable identity name");
}

namespace {

Poly3 side_expansion(const std::vector<AffineTerm>& terms, const Poly1& p) {
  Poly3 acc;
  for (const auto& t : terms) {
    acc += t.weight * exact::compose_affine(p, t.ax, t.ay, t.az);
  }
  return acc;
}

}  // namespace

IdentityVerdict verify_identity(const IdentityId& id) {
  const IdentitySides sides = identity_sides(id);

  // Quadratic coefficients to substitute; both sides are linear in f, so each
  // value is an independent witness.
  const Rational coefficients[] = {Rational(1), Rational(-3), Rational(5, 2),
                                   Rational(-7, 3), Rational(11, 4)};

  IdentityVerdict verdict{id, true, Poly3::zero()};
  for (const auto& a : coefficients) {
    const Poly1 f = Poly1::monomial(2, a);
    Poly3 diff = side_expansion(sides.lhs, f) - side_expansion(sides.rhs, f);
    if (a == Rational(1)) verdict.difference = diff;
    if (!diff.is_zero()) verdict.holds = false;
  }
  return verdict;
}

std::vector<IdentityId> default_identity_sweep() {
  const int ab_values[] = {-5, -3, -2, 2, 3, 5};
  const int c_values[] = {-3, -2, 2, 3};

  std::vector<IdentityId> sweep;
  sweep.push_back(IdentityId::make(IdentityName::I2_1));
  sweep.push_back(IdentityId::make(IdentityName::I2_2));
  sweep.push_back(IdentityId::make(IdentityName::I2_3));
  for (int a : ab_values) {
    sweep.push_back(IdentityId::make(IdentityName::I2_4, a));
  }
  for (auto name : {IdentityName::I2_8, IdentityName::I2_9, IdentityName::I2_20}) {
    for (int a : ab_values) {
      for (int b : ab_values) {
        if (a == b || a == -b) continue;
        sweep.push_back(IdentityId::make(name, a, b));
      }
    }
  }
  for (auto name : {IdentityName::I2_21, IdentityName::I2_22, IdentityName::I2_24,
                    IdentityName::I2_28}) {
    for (int c : c_values) {
      sweep.push_back(IdentityId::make(name, {}, {}, c));
    }
  }
  for (int c : c_values) {
    for (int k = 1; k <= 6; ++k) {
      sweep.push_back(IdentityId::make(IdentityName::I2_23, {}, {}, c, k));
    }
    sweep.push_back(IdentityId::make(IdentityName::I2_23, {}, {}, c, 3 * c));
  }
  return sweep;
}

}  // namespace quadstab::funceq
