#include "intr/parse.hpp"

#include <cctype>
#include <regex>

namespace intr {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept(const std::string& word) {
    skip();
    if (s_.compare(i_, word.size(), word) != 0) return false;
    i_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void finish() {
    if (!done()) fail("unexpected trailing input");
  }
  Integer integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return Integer(s_.substr(start, i_ - start));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

std::int64_t radicand(Cursor& c) {
  const bool paren = c.accept('(');
  const Integer d = c.integer();
  if (paren) c.expect(')');
  if (!d.fits_slong_p() || !is_squarefree(d.get_si()) || d < 2) c.fail("radicand must be squarefree and >= 2");
  return d.get_si();
}

// Group expressions: + - on elements, * and / by rationals.
GroupElement group_expr(Cursor& c);

GroupElement group_factor(Cursor& c) {
  if (c.accept('(')) {
    GroupElement e = group_expr(c);
    c.expect(')');
    return e;
  }
  if (c.accept("sqrt")) return GroupElement::sqrt(radicand(c));
  if (c.at_digit()) {
    const Rational n(c.integer());
    // "2sqrt2"
    if (c.peek() == 's') {
      if (!c.accept("sqrt")) c.fail("unexpected letter");
      return n * GroupElement::sqrt(radicand(c));
    }
    return GroupElement(n);
  }
  c.fail("expected a group element");
}

GroupElement group_mul(const GroupElement& x, const GroupElement& y, Cursor& c) {
  if (x.is_rational()) return y * x.rational_part();
  if (y.is_rational()) return x * y.rational_part();
  c.fail("product of two irrational elements is not in the group");
}

GroupElement group_term(Cursor& c) {
  GroupElement x = group_factor(c);
  while (true) {
    if (c.accept('*')) {
      x = group_mul(x, group_factor(c), c);
    } else if (c.accept('/')) {
      const GroupElement y = group_factor(c);
      if (!y.is_rational() || y.is_zero()) c.fail("divisor must be a nonzero rational");
      x = x / y.rational_part();
    } else {
      return x;
    }
  }
}

GroupElement group_expr(Cursor& c) {
  bool neg = c.accept('-');
  if (!neg) c.accept('+');
  GroupElement x = group_term(c);
  if (neg) x = -x;
  while (true) {
    if (c.accept('+')) {
      x += group_term(c);
    } else if (c.accept('-')) {
      x -= group_term(c);
    } else {
      return x;
    }
  }
}

// Expressions in x and t. Everything is carried as a rational function.
class ExprParser {
 public:
  ExprParser(Cursor& c, CoefficientField field, const std::optional<Lattice>& lattice)
      : c_(c), field_(field), lattice_(lattice) {}

  RationalFunction expr() {
    const bool neg = c_.accept('-');
    if (!neg) c_.accept('+');
    RationalFunction f = term();
    if (neg) f = f * constant(-1);
    while (true) {
      if (c_.accept('+')) {
        f = add(f, term());
      } else if (c_.accept('-')) {
        f = add(f, term() * constant(-1));
      } else {
        return f;
      }
    }
  }

 private:
  RationalFunction constant(const Rational& q) const {
    return RationalFunction(FieldElement::constant(field_, q));
  }

  static RationalFunction add(const RationalFunction& f, const RationalFunction& g) {
    if (f.den() == g.den()) return RationalFunction(f.num() + g.num(), f.den());
    return RationalFunction(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
  }

  bool starts_primary() {
    const char ch = c_.peek();
    return ch == '(' || ch == 't' || ch == 'x' || std::isdigit(static_cast<unsigned char>(ch));
  }

  RationalFunction term() {
    RationalFunction f = power();
    while (true) {
      if (c_.accept('*')) {
        f = f * power();
      } else if (c_.accept('/')) {
        const RationalFunction g = power();
        if (g.is_zero()) c_.fail("division by zero");
        f = f / g;
      } else if (starts_primary()) {
        f = f * power();
      } else {
        return f;
      }
    }
  }

  GroupElement exponent() {
    if (c_.accept('-')) return -exponent();
    return group_factor(c_);
  }

  RationalFunction power() {
    if (c_.accept('t')) {
      GroupElement e = 1;
      if (c_.accept('^')) e = exponent();
      if (lattice_ && !in_group(e, *lattice_)) c_.fail("exponent " + e.to_string() + " is not in " + lattice_->to_string());
      return RationalFunction(FieldElement::t(field_, e));
    }
    RationalFunction base;
    if (c_.accept('x')) {
      base = RationalFunction(XPoly::x(field_), XPoly::constant(FieldElement::constant(field_, 1)));
    } else if (c_.accept('(')) {
      base = expr();
      c_.expect(')');
    } else if (c_.at_digit()) {
      const Rational n(c_.integer());
      base = constant(n);
    } else {
      c_.fail("expected a term");
    }
    if (!c_.accept('^')) return base;
    const GroupElement e = exponent();
    if (!e.is_rational() || e.rational_part().get_den() != 1) c_.fail("exponent must be an integer");
    const long n = e.rational_part().get_num().get_si();
    if (n < 0 && base.is_zero()) c_.fail("negative power of zero");
    return base.pow(n);
  }

  Cursor& c_;
  CoefficientField field_;
  std::optional<Lattice> lattice_;
};

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Interval parse_interval(Cursor& c) {
  Interval iv;
  if (c.peek() != '[' && c.peek() != '(') {
    return Interval::point(group_expr(c));
  }
  iv.lo_closed = c.accept('[');
  if (!iv.lo_closed) c.expect('(');
  if (c.accept("-inf")) {
    c.fail("intervals of a monoid are bounded below");
  }
  iv.lo = group_expr(c);
  c.expect(',');
  if (c.accept("inf") || c.accept("+inf")) {
    iv.hi.reset();
    if (!c.accept(')')) c.fail("an infinite end must be open");
    iv.hi_closed = false;
    return iv;
  }
  iv.hi = group_expr(c);
  if (c.accept(']')) {
    iv.hi_closed = true;
  } else {
    c.expect(')');
    iv.hi_closed = false;
  }
  return iv;
}

}  // namespace

Lattice parse_group(const std::string& text) {
  const std::string s = strip(text);
  if (s == "Z" || s == "ZZ") return Lattice::integers();
  if (s == "Q" || s == "QQ") return Lattice::rationals();
  static const std::regex quad(R"(^([ZQ])\s*([\[\(])\s*sqrt\s*\(?\s*(\d+)\s*\)?\s*([\]\)])$)");
  std::smatch m;
  if (!std::regex_match(s, m, quad)) throw ParseError("unknown group \"" + text + "\"");
  const bool integers = m[1] == "Z";
  if (integers != (m[2] == "[") || integers != (m[4] == "]")) {
    throw ParseError("use Z[sqrtD] or Q(sqrtD), got \"" + text + "\"");
  }
  const long d = std::stol(m[3]);
  if (d < 2 || !is_squarefree(d)) throw ParseError("radicand must be squarefree and >= 2 in \"" + text + "\"");
  return integers ? Lattice::quadratic_integers(d) : Lattice::quadratic_field(d);
}

GroupElement parse_group_element(const std::string& text) {
  Cursor c(text);
  GroupElement e = group_expr(c);
  c.finish();
  return e;
}

MonoidSpec parse_monoid(const std::string& text) {
  const std::string s = strip(text);
  if (s == "one-gap") return MonoidSpec::one_gap();
  if (s == "two-three-four") return MonoidSpec::two_three_four();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("monoid needs \"<group>: 0 u ...\", got \"" + text + "\"");
  const Lattice group = parse_group(s.substr(0, colon));
  const std::string body = s.substr(colon + 1);
  Cursor c(body);
  std::vector<Interval> parts;
  bool first = true;
  while (!c.done()) {
    if (!first && !c.accept('u') && !c.accept('U')) c.fail("expected 'u' between parts");
    const Interval iv = parse_interval(c);
    if (first && iv.is_point() && iv.lo->is_zero()) {
      first = false;
      continue;
    }
    first = false;
    parts.push_back(iv);
  }
  for (const Interval& iv : parts) {
    for (const auto& end : {iv.lo, iv.hi}) {
      if (end && !end->is_rational() && end->radicand() != group.radicand()) {
        throw ParseError("endpoint " + end->to_string() + " does not belong to " + group.to_string());
      }
    }
  }
  try {
    return make_monoid(group, parts);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid monoid \"") + text + "\": " + e.what());
  }
}

CoefficientField parse_field(const std::string& text) {
  const std::string s = strip(text);
  if (s == "Q" || s == "QQ") return CoefficientField::rationals();
  static const std::regex fp(R"(^(?:F_?(\d+)|GF\s*\(\s*(\d+)\s*\))$)");
  std::smatch m;
  if (!std::regex_match(s, m, fp)) throw ParseError("unknown field \"" + text + "\"");
  const long p = std::stol(m[1].matched ? m[1].str() : m[2].str());
  try {
    return CoefficientField::prime(p);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid field \"") + text + "\": " + e.what());
  }
}

FieldElement parse_field_element(const std::string& text, CoefficientField field,
                                 const std::optional<Lattice>& lattice) {
  const RationalFunction f = parse_rational_function(text, field, lattice);
  if (!f.is_constant()) throw ParseError("\"" + text + "\" depends on x");
  return f.constant_value();
}

RationalFunction parse_rational_function(const std::string& text, CoefficientField field,
                                         const std::optional<Lattice>& lattice) {
  Cursor c(text);
  try {
    ExprParser p(c, field, lattice);
    RationalFunction f = p.expr();
    c.finish();
    return f;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("cannot evaluate \"") + text + "\": " + e.what());
  }
}

}  // namespace intr
