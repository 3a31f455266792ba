#include "intr/rational_function.hpp"

#include <algorithm>

namespace intr {

XPoly::XPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly XPoly::x(CoefficientField field) {
  return XPoly({FieldElement::constant(field, 0), FieldElement::constant(field, 1)});
}

XPoly XPoly::linear(const FieldElement& s) {
  return XPoly({-s, FieldElement::constant(s.field(), 1)});
}

FieldElement XPoly::evaluate(const FieldElement& a) const {
  if (coeffs_.empty()) return FieldElement::constant(a.field(), 0);
  FieldElement acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * a + coeffs_[i];
  return acc;
}

XPoly& XPoly::operator+=(const XPoly& y) {
  if (coeffs_.size() < y.coeffs_.size()) {
    const CoefficientField field = y.coeffs_.front().field();
    coeffs_.resize(y.coeffs_.size(), FieldElement::constant(field, 0));
  }
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + y.coeffs_[i];
  trim();
  return *this;
}

XPoly operator-(const XPoly& x, const XPoly& y) {
  std::vector<FieldElement> neg;
  for (const FieldElement& c : y.coeffs_) neg.push_back(-c);
  return x + XPoly(std::move(neg));
}

XPoly operator*(const XPoly& x, const XPoly& y) {
  if (x.is_zero() || y.is_zero()) return XPoly();
  const CoefficientField field = x.coeffs_.front().field();
  std::vector<FieldElement> out(x.coeffs_.size() + y.coeffs_.size() - 1, FieldElement::constant(field, 0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      out[i + j] = out[i + j] + x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return XPoly(std::move(out));
}

std::optional<XPoly> XPoly::divide_exact(const XPoly& g) const {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const FieldElement& lead = g.coeffs_.back();
  if (!lead.is_polynomial() || lead.num().size() != 1 || !lead.num().min_exponent().is_zero()) return std::nullopt;
  const CoefficientField field = lead.field();
  const FieldElement inv = FieldElement::constant(field, field.inverse(lead.num().lowest_coefficient()));
  if (is_zero()) return XPoly();
  if (degree() < g.degree()) return std::nullopt;
  std::vector<FieldElement> r = coeffs_;
  std::vector<FieldElement> q(static_cast<std::size_t>(degree() - g.degree() + 1), FieldElement::constant(field, 0));
  for (long k = degree(); k >= g.degree(); --k) {
    const FieldElement c = r[k] * inv;
    if (c.is_zero()) continue;
    const long shift = k - g.degree();
    q[shift] = c;
    for (long i = 0; i <= g.degree(); ++i) r[shift + i] = r[shift + i] - c * g.coeffs_[i];
  }
  for (const auto& c : r) {
    if (!c.is_zero()) return std::nullopt;
  }
  return XPoly(std::move(q));
}

XPoly XPoly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> out;
  for (const FieldElement& a : coeffs_) out.push_back(a * c);
  return XPoly(std::move(out));
}

XPoly XPoly::pow(unsigned n) const {
  if (coeffs_.empty()) return n == 0 ? throw PreconditionError("0^0") : XPoly();
  XPoly result = constant(FieldElement::constant(coeffs_.front().field(), 1));
  XPoly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

XPoly XPoly::compose(const XPoly& g) const {
  if (coeffs_.empty()) return XPoly();
  XPoly acc = constant(coeffs_.back());
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * g + constant(coeffs_[i]);
  return acc;
}

bool operator==(const XPoly& x, const XPoly& y) {
  if (x.coeffs_.size() != y.coeffs_.size()) return false;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (!(x.coeffs_[i] == y.coeffs_[i])) return false;
  }
  return true;
}

std::vector<std::pair<long, GroupElement>> XPoly::lines() const {
  std::vector<std::pair<long, GroupElement>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(static_cast<long>(i), valuation(coeffs_[i]));
  }
  return out;
}

PiecewiseLinear XPoly::minval() const {
  if (is_zero()) throw PreconditionError("minval of the zero polynomial");
  return envelope(lines());
}

std::string XPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = coeffs_[i].to_string();
    if (i == 0) {
      s += c;
      continue;
    }
    if (c != "1") s += "(" + c + ")*";
    s += i > 1 ? "x^" + std::to_string(i) : "x";
  }
  return s;
}

RationalFunction::RationalFunction(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
}

FieldElement RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionError("rational function is not constant");
  const FieldElement& d = den_.coeffs().front();
  return num_.is_zero() ? FieldElement::constant(d.field(), 0) : num_.coeffs().front() / d;
}

FieldElement RationalFunction::evaluate(const FieldElement& a) const {
  FieldElement d = den_.evaluate(a);
  if (d.is_zero()) throw PreconditionError("denominator vanishes at " + a.to_string());
  return num_.evaluate(a) / d;
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero function");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw PreconditionError("negative power of the zero function");
    return RationalFunction(den_, num_).pow(-n);
  }
  return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RationalFunction RationalFunction::compose(const XPoly& g) const {
  return RationalFunction(num_.compose(g), den_.compose(g));
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  return f.num_ * g.den_ == g.num_ * f.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0 && den_.coeffs().front() == FieldElement::constant(den_.coeffs().front().field(), 1)) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

PiecewiseLinear minval_of(const RationalFunction& f) {
  if (f.is_zero()) throw PreconditionError("minval of the zero function");
  return f.num().minval() - f.den().minval();
}

std::vector<GroupElement> exceptional_abscissas(const RationalFunction& f) {
  if (f.is_zero()) throw PreconditionError("minval of the zero function");
  // Line slopes are distinct degrees, so ties on an envelope are exactly its
  // breakpoints.
  std::vector<GroupElement> out = f.num().minval().breakpoints();
  const std::vector<GroupElement> d = f.den().minval().breakpoints();
  out.insert(out.end(), d.begin(), d.end());
  std::sort(out.begin(), out.end(), GroupLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace intr

namespace intr {

RationalFunction RationalFunction::divide_by_factor(const RationalFunction& g) const {
  auto num = num_.divide_exact(g.num_);
  auto den = den_.divide_exact(g.den_);
  if (num && den) return RationalFunction(*num, *den);
  return *this / g;
}

}  // namespace intr
