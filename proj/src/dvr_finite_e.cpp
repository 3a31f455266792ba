#include "intr/dvr_finite_e.hpp"

namespace intr {

namespace {

bool integer_exponents(const Poly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (!e.is_rational() || e.rational_part().get_den() != 1) return false;
  }
  return true;
}

long order(const FieldElement& x) { return valuation(x).rational_part().get_num().get_si(); }

}  // namespace

DvrContext make_dvr_context(CoefficientField field, std::vector<FieldElement> points,
                            std::vector<FieldElement> separators) {
  if (points.empty()) throw PreconditionError("E must be non-empty");
  for (const auto& s : points) {
    if (!(s.field() == field)) throw PreconditionError("point over a different field");
    if (!integer_exponents(s.num()) || !integer_exponents(s.den())) {
      throw PreconditionError("points must lie in k(u): " + s.to_string());
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw PreconditionError("repeated point " + points[i].to_string());
    }
  }
  if (!separators.empty() && separators.size() != points.size()) {
    throw PreconditionError("need one separator per point");
  }
  DvrContext ctx{field, std::move(points), {}};
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    long m = 0;
    bool first = true;
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      if (j == i) continue;
      const long d = order(ctx.points[j] - ctx.points[i]);
      m = first ? d : std::max(m, d);
      first = false;
    }
    if (separators.empty()) {
      ctx.separators.push_back(FieldElement::t(field, m));
      continue;
    }
    const FieldElement& c = separators[i];
    if (c.is_zero()) throw PreconditionError("separator must be nonzero");
    if (!first && order(c) < m) {
      throw PreconditionError("a point of E is closer to " + ctx.points[i].to_string() + " than the separator " +
                              c.to_string());
    }
    ctx.separators.push_back(c);
  }
  return ctx;
}

RationalFunction psi(const DvrContext& ctx, std::size_t i) {
  return gadget_psi_s(ctx.points.at(i), ctx.separators.at(i), ctx.u()).func;
}

std::vector<long> value_vector(const RationalFunction& phi, const DvrContext& ctx) {
  if (phi.is_zero()) throw PreconditionError("the zero function has no value vector");
  std::vector<long> out;
  for (const auto& s : ctx.points) {
    FieldElement value;
    try {
      value = phi.evaluate(s);
    } catch (const PreconditionError&) {
      throw PreconditionError("undefined at " + s.to_string());
    }
    if (value.is_zero()) throw PreconditionError("vanishes at " + s.to_string());
    out.push_back(order(value));
  }
  return out;
}

bool is_member(const RationalFunction& phi, const DvrContext& ctx) {
  for (long v : value_vector(phi, ctx)) {
    if (v < 0) return false;
  }
  return true;
}

bool is_unit(const RationalFunction& phi, const DvrContext& ctx) {
  for (long v : value_vector(phi, ctx)) {
    if (v != 0) return false;
  }
  return true;
}

RationalFunction DvrFactorization::product(const DvrContext& ctx) const {
  RationalFunction p = unit;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) p = p * psi(ctx, i).pow(exponents[i]);
  }
  return p;
}

DvrFactorization factor_into_atoms(const RationalFunction& phi, const DvrContext& ctx) {
  DvrFactorization out;
  out.exponents = value_vector(phi, ctx);
  for (long e : out.exponents) {
    if (e < 0) throw PreconditionError("not integer-valued on E");
  }
  RationalFunction denom(FieldElement::constant(ctx.field, 1));
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (out.exponents[i] > 0) denom = denom * psi(ctx, i).pow(out.exponents[i]);
  }
  out.unit = phi.divide_by_factor(denom);
  const RationalFunction inverse(out.unit.den(), out.unit.num());
  if (!is_unit(out.unit, ctx) || !is_unit(inverse, ctx)) throw std::logic_error("cofactor is not a unit");
  return out;
}

PointFamily PointFamily::of(std::vector<FieldElement> points) {
  PointFamily f;
  f.finite = std::move(points);
  return f;
}

PointFamily PointFamily::geometric(const FieldElement& a, const FieldElement& b, std::optional<long> n,
                                   bool contains_limit) {
  if (b.is_zero()) throw PreconditionError("step must be nonzero");
  PointFamily f;
  f.limit = a;
  f.step = b;
  f.truncate = n;
  f.contains_limit = contains_limit;
  return f;
}

std::vector<FieldElement> PointFamily::points() const {
  if (!is_finite()) throw PreconditionError("infinite point family");
  std::vector<FieldElement> out = finite;
  if (step) {
    const CoefficientField field = step->field();
    for (long n = 1; n <= *truncate; ++n) out.push_back(*limit + *step * FieldElement::t(field, n));
    if (contains_limit) out.push_back(*limit);
  }
  return out;
}

AtomicityReport antimatter_flag(const PointFamily& family, CoefficientField field) {
  AtomicityReport r;
  if (family.is_finite()) {
    const DvrContext ctx = make_dvr_context(field, family.points());
    r.atomic = true;
    r.explanation = "E is finite with " + std::to_string(ctx.size()) +
                    " points and the value group is Z: IntR(E,V) is a UFD with value monoid N^" +
                    std::to_string(ctx.size());
    return r;
  }
  r.atomic = false;
  r.witness = family.limit;
  if (family.contains_limit) {
    r.explanation = "E accumulates at its point " + family.limit->to_string() +
                    ": every phi with phi(a) in the maximal ideal is strictly divisible by a nonunit, so u has no "
                    "factorization into atoms";
  } else {
    r.explanation = "E is infinite (accumulating at " + family.limit->to_string() +
                    "): a product of finitely many atoms lies in the maximal ideal at finitely many points only, so "
                    "u is not a product of atoms";
  }
  return r;
}

}  // namespace intr
