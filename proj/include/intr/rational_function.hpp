#pragma once

// Polynomials and rational functions in x over K, their evaluation at
// points of K and their minimum-valuation functions.

#include <optional>
#include <string>
#include <vector>

#include "intr/monoid_algebra.hpp"
#include "intr/tropical_minval.hpp"

namespace intr {

// a_0 + a_1 x + ... + a_n x^n with a_i in K; no trailing zero coefficients.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<FieldElement> coeffs);

  static XPoly constant(const FieldElement& c) { return XPoly({c}); }
  static XPoly x(CoefficientField field);
  // (x - s)
  static XPoly linear(const FieldElement& s);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  FieldElement evaluate(const FieldElement& a) const;

  XPoly& operator+=(const XPoly& y);
  friend XPoly operator+(XPoly x, const XPoly& y) { return x += y; }
  friend XPoly operator-(const XPoly& x, const XPoly& y);
  friend XPoly operator*(const XPoly& x, const XPoly& y);
  XPoly scaled(const FieldElement& c) const;
  XPoly pow(unsigned n) const;
  // f(g(x))
  XPoly compose(const XPoly& g) const;
  // f / g when g divides f and the leading coefficient of g lies in k;
  // nullopt otherwise.
  std::optional<XPoly> divide_exact(const XPoly& g) const;

  friend bool operator==(const XPoly& x, const XPoly& y);

  // Lines (i, v(a_i)) for the nonzero coefficients.
  std::vector<std::pair<long, GroupElement>> lines() const;
  PiecewiseLinear minval() const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<FieldElement> coeffs_;
};

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(XPoly num, XPoly den);
  explicit RationalFunction(const FieldElement& c) : RationalFunction(XPoly::constant(c), XPoly::constant(one_like(c))) {}

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // The constant value; throws unless is_constant().
  FieldElement constant_value() const;

  // Throws PreconditionError when the denominator vanishes at a.
  FieldElement evaluate(const FieldElement& a) const;

  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  // f / g by exact division of numerators and denominators when possible.
  RationalFunction divide_by_factor(const RationalFunction& g) const;
  RationalFunction pow(long n) const;
  // f(g(x)) for a polynomial g.
  RationalFunction compose(const XPoly& g) const;

  friend bool operator==(const RationalFunction& f, const RationalFunction& g);

  std::string to_string() const;

 private:
  static FieldElement one_like(const FieldElement& c) { return FieldElement::constant(c.field(), 1); }

  XPoly num_;
  XPoly den_;
};

// minval of the numerator minus minval of the denominator.
PiecewiseLinear minval_of(const RationalFunction& f);

// Abscissas where two or more lines attain the numerator or denominator
// envelope; off these, v(f(a)) = minval_of(f)(v(a)).
std::vector<GroupElement> exceptional_abscissas(const RationalFunction& f);

}  // namespace intr
