#pragma once

// Exact arithmetic in k[t;M], in its fraction field K and in the local ring
// D = k[t;M]_(t;M). Elements of K are stored as fractions of generalized
// Laurent polynomials sum c_e t^e with exponents e in Gamma.

#include <map>
#include <string>

#include "intr/gap_monoid.hpp"
#include "intr/ordered_group.hpp"

namespace intr {

// Q (p == 0) or F_p.
struct CoefficientField {
  long p = 0;

  static CoefficientField rationals() { return {}; }
  static CoefficientField prime(long p);

  bool finite() const { return p != 0; }
  // Canonical representative: reduced fraction over Q, 0..p-1 over F_p.
  Rational reduce(const Rational& x) const;
  Rational inverse(const Rational& x) const;
  std::string to_string() const;

  bool operator==(const CoefficientField&) const = default;
};

class Poly {
 public:
  using Terms = std::map<GroupElement, Rational, GroupLess>;

  Poly() = default;
  explicit Poly(CoefficientField field) : field_(field) {}

  static Poly constant(CoefficientField field, const Rational& c);
  static Poly monomial(CoefficientField field, const Rational& c, const GroupElement& e);
  // t^e
  static Poly t(CoefficientField field, const GroupElement& e) { return monomial(field, 1, e); }

  const CoefficientField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  // Throws PreconditionError on the zero polynomial.
  const GroupElement& min_exponent() const;
  const GroupElement& max_exponent() const;
  const Rational& lowest_coefficient() const;
  Rational coefficient(const GroupElement& e) const;

  // Adds c*t^e (reducing into the field).
  void add_term(const GroupElement& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& y);
  Poly& operator-=(const Poly& y);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const Rational& c) const;
  // Multiplication by t^e.
  Poly shifted(const GroupElement& e) const;
  Poly pow(unsigned n) const;

  bool all_exponents_in(const MonoidSpec& spec) const;

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

  // "1 + t^(1/2) - 2*t^3"
  std::string to_string() const;

 private:
  CoefficientField field_;
  Terms terms_;
};

std::string exponent_to_string(const GroupElement& e);

// num/den with den != 0. Canonical form: the lowest term of den is 1*t^0.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Poly num);
  FieldElement(Poly num, Poly den);

  static FieldElement constant(CoefficientField field, const Rational& c);
  static FieldElement t(CoefficientField field, const GroupElement& e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const CoefficientField& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.size() == 1; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  // Throws PreconditionError on division by zero.
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement inverse() const;
  FieldElement pow(long n) const;

  // Equality by cross-multiplication.
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  std::string to_string() const;

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

// M-valuation: least exponent of num minus least exponent of den.
GroupElement valuation(const FieldElement& x);
GroupElement valuation(const Poly& x);

// Certificate that c lies in D: c = num/den with num, den in k[t;M] and den
// of valuation 0.
struct DCertificate {
  bool in_D = false;
  Poly num;
  Poly den;
  long odd_power = 1;  // n of the multiplier (x^n + b0^n)/(x + b0); 1 if unused
  GroupElement delta;  // integral-terminality bound used
  std::string reason;
};

DCertificate normalize_to_D(const FieldElement& c, const MonoidSpec& spec);

// Requires an InD certificate for x; unit iff v(x) = 0.
bool is_unit_of_D(const FieldElement& x, const MonoidSpec& spec);

}  // namespace intr
