#include "expr_parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace quadstab::cli {

using exact::Poly1;
using exact::Rational;
using funceq::FunctionExpr;

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("function expression: " + what + " at position " +
                                std::to_string(i) + " in '" + s + "'");
  }
};

std::string read_number_token(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.i;
  while (cur.i < cur.s.size() &&
         (std::isdigit(static_cast<unsigned char>(cur.s[cur.i])) || cur.s[cur.i] == '.')) {
    ++cur.i;
  }
  if (cur.i == start) cur.fail("expected a number");
  return cur.s.substr(start, cur.i - start);
}

unsigned read_exponent(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
    ++cur.i;
  }
  if (cur.i == start) cur.fail("expected an exponent");
  return static_cast<unsigned>(std::stoul(cur.s.substr(start, cur.i - start)));
}

// term := number [/ number] [* x [^ exp]] | x [^ exp]
void parse_term(Cursor& cur, bool negative, std::map<unsigned, Rational>& acc) {
  Rational coeff(1);
  bool have_coeff = false;

  if (cur.peek() != 'x') {
    const std::string num = read_number_token(cur);
    coeff = Rational::from_string(num);
    if (cur.eat('/')) {
      const Rational den = Rational::from_string(read_number_token(cur));
      if (den.is_zero()) cur.fail("zero denominator");
      coeff /= den;
    }
    have_coeff = true;
  }

  unsigned degree = 0;
  bool have_var = false;
  if (have_coeff ? cur.eat('*') : false, cur.peek() == 'x') {
    cur.eat('x');
    have_var = true;
    degree = cur.eat('^') ? read_exponent(cur) : 1;
  }
  if (!have_coeff && !have_var) cur.fail("expected a term");

  if (negative) coeff = -coeff;
  auto [it, inserted] = acc.try_emplace(degree, coeff);
  if (!inserted) it->second += coeff;
}

}  // namespace

Poly1 parse_poly1(const std::string& text) {
  Cursor cur{text};
  std::map<unsigned, Rational> acc;

  bool negative = cur.eat('-');
  if (!negative) cur.eat('+');
  parse_term(cur, negative, acc);
  while (!cur.done()) {
    if (cur.eat('+')) {
      negative = false;
    } else if (cur.eat('-')) {
      negative = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
    parse_term(cur, negative, acc);
  }
  return Poly1(std::move(acc));
}

namespace {

std::vector<std::string> split_args(const std::string& inner) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',') {
      out.push_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double arg_to_double(const std::string& s, const char* form) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("function expression: bad numeric argument '") +
                                s + "' for " + form);
  }
}

}  // namespace

ParsedFunction parse_function(const std::string& text) {
  auto named = [&](const std::string& name) -> std::optional<std::string> {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.compare(i, name.size(), name) != 0) return std::nullopt;
    i += name.size();
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '(' || text.back() != ')') return std::nullopt;
    return text.substr(i + 1, text.size() - i - 2);
  };

  ParsedFunction out;
  if (auto inner = named("quadpow")) {
    const auto args = split_args(*inner);
    if (args.size() != 3) {
      throw std::invalid_argument("function expression: quadpow expects (a,eps0,p)");
    }
    out.expr = FunctionExpr::quad_plus_power(arg_to_double(args[0], "quadpow"),
                                             arg_to_double(args[1], "quadpow"),
                                             arg_to_double(args[2], "quadpow"));
    return out;
  }
  if (auto inner = named("quadnoise")) {
    const auto args = split_args(*inner);
    if (args.size() != 3) {
      throw std::invalid_argument("function expression: quadnoise expects (a,eta,seed)");
    }
    const double seed = arg_to_double(args[2], "quadnoise");
    out.expr = FunctionExpr::quad_plus_noise(arg_to_double(args[0], "quadnoise"),
                                             arg_to_double(args[1], "quadnoise"),
                                             static_cast<std::uint64_t>(seed));
    return out;
  }

  out.poly = parse_poly1(text);
  if (out.poly->coeff(0).is_zero()) {
    out.expr = FunctionExpr::polynomial(*out.poly);
  }
  return out;
}

std::function<double(double)> ParsedFunction::evaluator() const {
  if (expr) return expr->evaluator();
  if (poly) return [p = *poly](double x) { return p.eval(x); };
  throw std::logic_error("ParsedFunction: empty");
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace quadstab::cli
