#include "intr/monoid_algebra.hpp"

#include <sstream>

namespace intr {

CoefficientField CoefficientField::prime(long p) {
  if (p < 2) throw PreconditionError("F_p needs a prime p, got " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw PreconditionError("F_p needs a prime p, got " + std::to_string(p));
  }
  return {p};
}

Rational CoefficientField::reduce(const Rational& x) const {
  if (p == 0) {
    Rational r = x;
    r.canonicalize();
    return r;
  }
  Integer mod(p);
  Integer n = x.get_num() % mod;
  Integer d = x.get_den() % mod;
  if (d == 0) throw PreconditionError("denominator vanishes in F_" + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
  Integer r = (n * inv) % mod;
  if (r < 0) r += mod;
  return Rational(r);
}

Rational CoefficientField::inverse(const Rational& x) const {
  if (x == 0) throw PreconditionError("inverse of zero coefficient");
  return reduce(Rational(1) / x);
}

std::string CoefficientField::to_string() const {
  return p == 0 ? "Q" : "F" + std::to_string(p);
}

Poly Poly::constant(CoefficientField field, const Rational& c) {
  return monomial(field, c, GroupElement(0));
}

Poly Poly::monomial(CoefficientField field, const Rational& c, const GroupElement& e) {
  Poly out(field);
  out.add_term(e, c);
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

const GroupElement& Poly::min_exponent() const {
  if (terms_.empty()) throw PreconditionError("valuation of zero");
  return terms_.begin()->first;
}

const GroupElement& Poly::max_exponent() const {
  if (terms_.empty()) throw PreconditionError("degree of zero");
  return terms_.rbegin()->first;
}

const Rational& Poly::lowest_coefficient() const {
  if (terms_.empty()) throw PreconditionError("valuation of zero");
  return terms_.begin()->second;
}

Rational Poly::coefficient(const GroupElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const GroupElement& e, const Rational& c) {
  Rational r = field_.reduce(c);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second = field_.reduce(it->second + r);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  return scaled(-1);
}

namespace {

void same_field(const Poly& x, const Poly& y) {
  if (!(x.field() == y.field())) {
    throw DescriptorMismatch("coefficient fields differ: " + x.field().to_string() + " vs " + y.field().to_string());
  }
}

}  // namespace

Poly& Poly::operator+=(const Poly& y) {
  same_field(*this, y);
  for (const auto& [e, c] : y.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& y) {
  same_field(*this, y);
  for (const auto& [e, c] : y.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  same_field(x, y);
  Poly out(x.field());
  if (x.field().finite()) {
    for (const auto& [e1, c1] : x.terms_) {
      for (const auto& [e2, c2] : y.terms_) out.add_term(e1 + e2, c1 * c2);
    }
    return out;
  }
  Rational prod;
  for (const auto& [e1, c1] : x.terms_) {
    auto hint = out.terms_.begin();
    for (const auto& [e2, c2] : y.terms_) {
      prod = c1 * c2;
      GroupElement e = e1;
      e += e2;
      hint = out.terms_.lower_bound(e);
      if (hint != out.terms_.end() && hint->first == e) {
        hint->second += prod;
        if (hint->second == 0) hint = out.terms_.erase(hint);
      } else {
        hint = out.terms_.emplace_hint(hint, std::move(e), prod);
      }
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(field_);
  for (const auto& [e, a] : terms_) out.add_term(e, a * c);
  return out;
}

Poly Poly::shifted(const GroupElement& s) const {
  Poly out(field_);
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + s, a);
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

bool Poly::all_exponents_in(const MonoidSpec& spec) const {
  for (const auto& [e, c] : terms_) {
    if (!spec.contains(e)) return false;
  }
  return true;
}

std::string exponent_to_string(const GroupElement& e) {
  if (e.is_rational() && e.rational_part().get_den() == 1 && e.sign() >= 0) return e.to_string();
  return "(" + e.to_string() + ")";
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e.is_zero()) {
      os << intr::to_string(mag);
      continue;
    }
    if (mag != 1) os << intr::to_string(mag) << "*";
    os << "t";
    if (!(e == GroupElement(1))) os << "^" << exponent_to_string(e);
  }
  return os.str();
}

FieldElement::FieldElement(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

FieldElement::FieldElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  same_field(num_, den_);
  if (den_.is_zero()) throw PreconditionError("division by zero");
  canonicalize();
}

FieldElement FieldElement::constant(CoefficientField field, const Rational& c) {
  return FieldElement(Poly::constant(field, c));
}

FieldElement FieldElement::t(CoefficientField field, const GroupElement& e) {
  return FieldElement(Poly::t(field, e));
}

void FieldElement::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  GroupElement e0 = den_.min_exponent();
  Rational inv = den_.field().inverse(den_.lowest_coefficient());
  if (e0.is_zero() && inv == 1) return;
  num_ = num_.shifted(-e0).scaled(inv);
  den_ = den_.shifted(-e0).scaled(inv);
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  out.num_ = -num_;
  return out;
}

namespace {

bool is_one(const Poly& p) {
  return p.size() == 1 && p.min_exponent().is_zero() && p.lowest_coefficient() == 1;
}

}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  if (x.den_ == y.den_) return FieldElement(x.num_ + y.num_, x.den_);
  return FieldElement(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  return x + (-y);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  if (is_one(x.den_) && is_one(y.den_)) return FieldElement(x.num_ * y.num_);
  return FieldElement(x.num_ * y.num_, x.den_ * y.den_);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  if (y.is_zero()) throw PreconditionError("division by zero");
  return FieldElement(x.num_ * y.den_, x.den_ * y.num_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  return FieldElement(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string FieldElement::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

GroupElement valuation(const Poly& x) {
  return x.min_exponent();
}

GroupElement valuation(const FieldElement& x) {
  if (x.is_zero()) throw PreconditionError("valuation of zero");
  return x.num().min_exponent() - x.den().min_exponent();
}

DCertificate normalize_to_D(const FieldElement& c, const MonoidSpec& spec) {
  DCertificate cert;
  auto delta = find_integrally_terminal(spec);
  if (!delta) throw PreconditionError("monoid is not integrally terminal: " + spec.to_string());
  cert.delta = *delta;
  const CoefficientField field = c.field();
  if (c.is_zero()) {
    cert.in_D = true;
    cert.num = Poly(field);
    cert.den = Poly::constant(field, 1);
    cert.reason = "zero";
    return cert;
  }
  // Canonical form has den with lowest term 1*t^0: when both parts are
  // already supported on M the fraction is in D as written.
  if (c.num().all_exponents_in(spec) && c.den().all_exponents_in(spec)) {
    cert.in_D = true;
    cert.num = c.num();
    cert.den = c.den();
    cert.reason = "numerator and denominator already in k[t;M]";
    return cert;
  }
  const GroupElement v = valuation(c);
  auto cmp = compare(v, *delta);
  if (cmp < 0 || (cmp == 0 && !spec.contains(*delta))) {
    cert.reason = "v(c) = " + v.to_string() + " is below the terminal bound " + delta->to_string();
    return cert;
  }
  const Poly& den = c.den();
  const Rational b0 = den.coefficient(GroupElement(0));  // 1 in canonical form
  Poly h = den - Poly::constant(field, b0);
  if (h.is_zero()) {
    cert.reason = "denominator is constant";
    cert.in_D = c.num().all_exponents_in(spec);
    cert.num = c.num();
    cert.den = den;
    return cert;
  }
  const GroupElement eps = h.min_exponent();
  // Least odd n with n*eps > delta.
  long n = 1;
  while (compare(eps * Rational(n), *delta) <= 0) n += 2;
  cert.odd_power = n;
  // f(h) = (h^n + b0^n)/(h + b0) = sum_{j<n} (-b0)^(n-1-j) h^j
  Poly f(field);
  Poly hp = Poly::constant(field, 1);
  for (long j = 0; j < n; ++j) {
    Rational coeff = 1;
    for (long i = 0; i < n - 1 - j; ++i) coeff *= -b0;
    f += hp.scaled(coeff);
    if (j + 1 < n) hp = hp * h;
  }
  Poly new_den = hp * h;
  Rational b0n = 1;
  for (long i = 0; i < n; ++i) b0n *= b0;
  new_den += Poly::constant(field, b0n);
  Poly new_num = c.num() * f;
  if (!(new_num * den == c.num() * new_den)) {
    cert.reason = "multiplier identity failed";
    return cert;
  }
  cert.num = std::move(new_num);
  cert.den = std::move(new_den);
  cert.in_D = cert.num.all_exponents_in(spec) && cert.den.all_exponents_in(spec);
  cert.reason = cert.in_D ? "odd-power multiplier with n = " + std::to_string(n)
                          : "multiplied fraction still has exponents outside M";
  return cert;
}

bool is_unit_of_D(const FieldElement& x, const MonoidSpec& spec) {
  if (!normalize_to_D(x, spec).in_D) throw PreconditionError("element is not certified in D: " + x.to_string());
  return valuation(x).is_zero();
}

}  // namespace intr
