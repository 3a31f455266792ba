#include "intr/d_factorization.hpp"

#include <algorithm>

namespace intr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void require_in_D(const FieldElement& x, const MonoidSpec& spec) {
  if (!normalize_to_D(x, spec).in_D) throw PreconditionError("element is not certified in D: " + x.to_string());
}

bool is_one_gap(const MonoidSpec& spec) {
  return spec.positive_part() == IntervalSet({Interval::at_least(1)});
}

std::vector<GroupElement> split_candidates(const GroupElement& v, const MonoidSpec& spec) {
  IntervalSet pos = spec.positive_part();
  IntervalSet splits = pos.intersect(pos.reflect(v));
  std::vector<GroupElement> out;
  if (auto away = is_bounded_away_from_zero(spec)) {
    if (splits.contains(away->group_bound) && spec.contains(away->group_bound)) out.push_back(away->group_bound);
  }
  for (const Interval& p : splits.parts()) {
    if (auto s = lattice_point_in(p, spec.group)) {
      if (spec.contains(*s) && spec.contains(v - *s) &&
          std::find(out.begin(), out.end(), *s) == out.end()) {
        out.push_back(*s);
      }
    }
  }
  return out;
}

}  // namespace

AtomDecision is_atom_of_D(const FieldElement& x, const MonoidSpec& spec) {
  require_in_D(x, spec);
  AtomDecision d;
  const GroupElement v = valuation(x);
  if (v.is_zero()) {
    d.verdict = Verdict::No;  // unit
    return d;
  }
  if (monoid_atoms(spec).contains(v)) {
    d.verdict = Verdict::Yes;
    return d;
  }
  for (const GroupElement& s : split_candidates(v, spec)) {
    FieldElement ts = FieldElement::t(x.field(), s);
    FieldElement rest = x / ts;
    if (normalize_to_D(rest, spec).in_D) {
      d.verdict = Verdict::No;
      d.split = std::make_pair(ts, rest);
      return d;
    }
  }
  d.verdict = Verdict::Unknown;
  return d;
}

Verdict associate_in_D(const FieldElement& x, const FieldElement& y, const MonoidSpec& spec) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero() ? Verdict::Yes : Verdict::No;
  if (!(x.field() == y.field())) throw DescriptorMismatch("coefficient fields differ");
  FieldElement q = x / y;
  if (!valuation(q).is_zero()) return Verdict::No;
  Rational c = q.num().coefficient(GroupElement(0));
  FieldElement r = q - FieldElement::constant(q.field(), c);
  if (r.is_zero()) return Verdict::Yes;
  if (!spec.contains(valuation(r))) return Verdict::No;
  if (normalize_to_D(q, spec).in_D && normalize_to_D(q.inverse(), spec).in_D) return Verdict::Yes;
  return Verdict::Unknown;
}

FieldElement DFactorization::product() const {
  if (factors.empty()) return FieldElement::constant(CoefficientField::rationals(), 1);
  FieldElement p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
  return p;
}

std::string DFactorization::to_string() const {
  std::string s;
  for (const FieldElement& f : factors) {
    if (!s.empty()) s += " * ";
    s += f.is_polynomial() && f.num().size() == 1 ? f.to_string() : "[" + f.to_string() + "]";
  }
  return s.empty() ? "()" : s;
}

DFactorization make_d_factorization(std::vector<FieldElement> factors, const MonoidSpec& spec) {
  DFactorization z;
  z.value = GroupElement(0);
  for (const FieldElement& f : factors) {
    z.atom_flags.push_back(is_atom_of_D(f, spec).verdict);
    z.value += valuation(f);
  }
  z.factors = std::move(factors);
  return z;
}

DFactorization factor_in_D(const FieldElement& x, const MonoidSpec& spec, long length) {
  require_in_D(x, spec);
  if (length < 1) throw PreconditionError("factorization length must be positive");
  const GroupElement v = valuation(x);
  if (v.sign() <= 0) throw PreconditionError("units and non-members have no factorization");
  if (length == 1) {
    DFactorization z = make_d_factorization({x}, spec);
    if (z.atom_flags.front() != Verdict::Yes) throw PreconditionError("length 1 needs an atom");
    return z;
  }
  const IntervalSet atoms = monoid_atoms(spec);
  const CoefficientField field = x.field();
  // l-1 copies of t^g and a cofactor of value v - (l-1)g; the cofactor's
  // higher terms can land in a gap, so several g are tried.
  std::vector<GroupElement> candidates{v / Rational(length)};
  const IntervalSet feasible = atoms.intersect(atoms.reflect(v).scaled(Rational(1) / Rational(length - 1)));
  constexpr long kSteps = 16;
  for (const Interval& p : feasible.parts()) {
    if (auto s = lattice_point_in(p, spec.group)) candidates.push_back(*s);
    if (!p.lo || !p.hi) continue;
    const GroupElement width = *p.hi - *p.lo;
    for (long j = 0; j <= kSteps; ++j) {
      const GroupElement lo = *p.lo + width * Rational(j, kSteps);
      candidates.push_back(lo);
      if (j < kSteps) {
        if (auto s = simple_lattice_point(lo, lo + width / Rational(kSteps), spec.group)) candidates.push_back(*s);
      }
    }
  }
  for (const GroupElement& g : candidates) {
    if (!in_group(g, spec.group) || !atoms.contains(g)) continue;
    const GroupElement rest = g * Rational(length - 1);
    if (!atoms.contains(v - rest)) continue;
    const FieldElement cofactor = x / FieldElement::t(field, rest);
    if (!normalize_to_D(cofactor, spec).in_D) continue;
    std::vector<FieldElement> factors(static_cast<std::size_t>(length - 1), FieldElement::t(field, g));
    factors.push_back(cofactor);
    return make_d_factorization(std::move(factors), spec);
  }
  throw PreconditionError("no factorization of length " + std::to_string(length) + " for value " + v.to_string());
}

DFactorization canonical_factorization(const FieldElement& x, const MonoidSpec& spec) {
  if (!is_one_gap(spec)) throw PreconditionError("canonical factorization needs the monoid 0 u [1,inf)");
  require_in_D(x, spec);
  const GroupElement v = valuation(x);
  if (compare(v, GroupElement(1)) < 0) throw PreconditionError("no factorization for value " + v.to_string());
  long k = v.floor().get_si() - 1;
  const CoefficientField field = x.field();
  std::vector<FieldElement> factors(static_cast<std::size_t>(k), FieldElement::t(field, 1));
  factors.push_back(x / FieldElement::t(field, GroupElement(k)));
  return make_d_factorization(std::move(factors), spec);
}

Distance distance(const DFactorization& z1, const DFactorization& z2, const MonoidSpec& spec) {
  if (!(z1.value == z2.value)) throw PreconditionError("factorizations of different elements");
  Distance d;
  std::vector<bool> used(z2.factors.size(), false);
  long common = 0;
  for (const FieldElement& f : z1.factors) {
    for (std::size_t j = 0; j < z2.factors.size(); ++j) {
      if (used[j]) continue;
      Verdict a = associate_in_D(f, z2.factors[j], spec);
      if (a == Verdict::Unknown) d.certified = false;
      if (a == Verdict::Yes) {
        used[j] = true;
        ++common;
        break;
      }
    }
  }
  long n1 = static_cast<long>(z1.factors.size());
  long n2 = static_cast<long>(z2.factors.size());
  d.value = std::max(n1 - common, n2 - common);
  return d;
}

std::vector<DFactorization> three_chain(const FieldElement& x, const DFactorization& z, const MonoidSpec& spec) {
  if (!is_one_gap(spec)) throw PreconditionError("the 3-chain procedure needs the monoid 0 u [1,inf)");
  if (!(associate_in_D(z.product(), x, spec) == Verdict::Yes)) {
    throw PreconditionError("factorization does not factor the given element");
  }
  const CoefficientField field = x.field();
  const FieldElement t = FieldElement::t(field, 1);
  std::vector<DFactorization> chain{z};
  std::vector<FieldElement> cur = z.factors;
  while (true) {
    std::vector<std::size_t> loose;
    for (std::size_t i = 0; i < cur.size() && loose.size() < 2; ++i) {
      if (associate_in_D(cur[i], t, spec) != Verdict::Yes) loose.push_back(i);
    }
    if (loose.size() < 2) break;
    FieldElement p = cur[loose[0]] * cur[loose[1]];
    cur.erase(cur.begin() + static_cast<long>(loose[1]));
    cur.erase(cur.begin() + static_cast<long>(loose[0]));
    const GroupElement vp = valuation(p);
    if (compare(vp, GroupElement(3)) >= 0) {
      cur.push_back(t);
      cur.push_back(t);
      cur.push_back(p / FieldElement::t(field, 2));
    } else {
      cur.push_back(t);
      cur.push_back(p / t);
    }
    chain.push_back(make_d_factorization(cur, spec));
  }
  DFactorization canon = canonical_factorization(x, spec);
  const DFactorization& last = chain.back();
  bool same = last.factors.size() == canon.factors.size() &&
              std::equal(last.factors.begin(), last.factors.end(), canon.factors.begin());
  if (!same) chain.push_back(std::move(canon));
  return chain;
}

std::vector<DFactorization> connecting_chain(const FieldElement& x, const DFactorization& z1,
                                             const DFactorization& z2, const MonoidSpec& spec) {
  std::vector<DFactorization> a = three_chain(x, z1, spec);
  std::vector<DFactorization> b = three_chain(x, z2, spec);
  // a ends at the canonical factorization, which b also ends at
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) a.push_back(*it);
  return a;
}

}  // namespace intr
