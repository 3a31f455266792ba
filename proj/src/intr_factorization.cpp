#include "intr/intr_factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace intr {

namespace {

bool is_one_gap(const MonoidSpec& spec) { return spec.positive_part() == IntervalSet({Interval::at_least(1)}); }

void require_one_gap(const MonoidSpec& spec) {
  if (!is_one_gap(spec)) throw PreconditionError("this operation needs the monoid 0 u [1,inf)");
}

void require_member(const IntRElement& phi) {
  if (phi.membership != Membership::Certified) {
    throw PreconditionError("element is not certified in IntR(K,D): " + phi.note);
  }
}

GroupElement lower_bound_of(const MonoidSpec& spec) {
  const auto away = is_bounded_away_from_zero(spec);
  if (!away) throw PreconditionError("monoid is not bounded away from 0");
  return away->group_bound;
}

IntRElement power(const IntRElement& f, long n, const GadgetContext& ctx) {
  IntRElement out = f;
  for (long i = 1; i < n; ++i) out = multiply(out, f, ctx);
  return out;
}

FieldElement t_pow(const GadgetContext& ctx, const GroupElement& e) { return FieldElement::t(ctx.field, e); }

// d = z^(l-1) * d / z^(l-1) with z the zig-zag from alpha to
// (v(d) - alpha)/(l-1).
IntRFactorization zigzag_length(const IntRElement& d, long length, const GroupElement& alpha,
                                const GadgetContext& ctx) {
  const GroupElement v = valuation(d.func.constant_value());
  const GroupElement alpha_prime = (v - alpha) / Rational(length - 1);
  ZigZagParams p{alpha, alpha_prime, lower_bound_of(ctx.spec) / Rational(length - 1), ZigZagCase::Auto};
  const IntRElement z = gadget_zigzag(p, ctx);
  const IntRElement rho = divide(d, power(z, length - 1, ctx), ctx);
  std::vector<IntRElement> factors(static_cast<std::size_t>(length - 1), z);
  factors.push_back(rho);
  return make_intr_factorization(std::move(factors), ctx);
}

// A point of Gamma where the profile lies in [m, m+1), m = floor(alpha).
GroupElement near_infimum(const ValueProfile& profile, const GroupElement& alpha) {
  const Extremum inf = profile.infimum();
  if (inf.attained && inf.at) return *inf.at;
  const GroupElement ceiling(Rational(alpha.floor() + 1));
  const PiecewiseLinear& f = profile.generic;
  std::optional<GroupElement> b;
  for (const auto& x : f.breakpoints()) {
    if (f.evaluate(x) == alpha) b = x;
  }
  if (!b) throw PreconditionError("infimum is not approached at a breakpoint");
  long slope = 1;
  for (const auto& piece : f.pieces()) slope = std::max(slope, std::abs(piece.slope));
  const GroupElement r = (ceiling - alpha) / Rational(slope + 1);
  auto g = simple_lattice_point(*b - r, *b + r, profile.lattice);
  if (!g) throw PreconditionError("no lattice point near the infimum");
  return *g;
}

IntRFactorization factor_nonconstant(const IntRElement& phi, long length, const GadgetContext& ctx) {
  if (!phi.profile.exact()) throw PreconditionError("factorization needs an exact profile");
  const GroupElement alpha = *phi.alpha;
  const long m = alpha.floor().get_si();
  if (length == 1) {
    if (m != 1) throw PreconditionError("length 1 needs 1 <= alpha < 2");
    return make_intr_factorization({phi}, ctx);
  }
  if (length < 2 || length > m) {
    throw PreconditionError("length " + std::to_string(length) + " is outside {2.." + std::to_string(m) + "}");
  }
  const GroupElement star = near_infimum(phi.profile, alpha);
  const GroupElement value = *phi.profile.at(star).lo;
  const GroupElement top = GroupElement(m - 1) / Rational(length - 1);
  IntRElement psi;
  if (top == GroupElement(1)) {
    psi = make_constant(t_pow(ctx, 1), ctx);
  } else {
    // The upper plateau of psi has to cover star.
    GroupElement upper;
    ZigZagParams p{1, top, 0, ZigZagCase::Auto};
    if (ctx.lattice().divisible()) {
      const long n = default_unit_valued_poly(ctx.field).degree();
      upper = (top - GroupElement(1)) / Rational(n);
    } else {
      p.eps = min(lower_bound_of(ctx.spec), GroupElement(m + 1) - value) / Rational(length - 1);
      upper = zigzag_plateau(1, top, p.eps, ctx.lattice()) / Rational(2);
    }
    const GroupElement s(Rational((star - upper).floor() - 1));
    psi = compose_scale(gadget_zigzag(p, ctx), s, ctx);
  }
  const IntRElement rest = divide(phi, power(psi, length - 1, ctx), ctx);
  std::vector<IntRElement> factors{rest};
  for (long i = 1; i < length; ++i) factors.push_back(psi);
  return make_intr_factorization(std::move(factors), ctx);
}

}  // namespace

RationalFunction IntRFactorization::product() const {
  if (factors.empty()) throw PreconditionError("empty factorization");
  RationalFunction p = factors.front().func;
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i].func;
  return p;
}

bool IntRFactorization::all_atoms() const {
  return std::all_of(atom_flags.begin(), atom_flags.end(), [](Verdict v) { return v == Verdict::Yes; });
}

std::string IntRFactorization::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " * ";
    s += "[" + factors[i].func.to_string() + "]";
  }
  return s;
}

IntRFactorization make_intr_factorization(std::vector<IntRElement> factors, const GadgetContext& ctx) {
  IntRFactorization z;
  z.factors = std::move(factors);
  for (const auto& f : z.factors) {
    z.atom_flags.push_back(f.membership == Membership::Certified ? atom_rule(f, ctx) : Verdict::Unknown);
  }
  return z;
}

IntRAtomDecision atom_certify_intr(const IntRElement& phi, const GadgetContext& ctx) {
  require_member(phi);
  IntRAtomDecision out;
  out.verdict = atom_rule(phi, ctx, &out.reason);
  if (out.verdict != Verdict::No || out.reason == "unit") return out;
  if (phi.is_constant()) {
    const AtomDecision a = is_atom_of_D(phi.func.constant_value(), ctx.spec);
    if (a.split) out.split = std::make_pair(make_constant(a.split->first, ctx), make_constant(a.split->second, ctx));
  } else if (is_one_gap(ctx.spec)) {
    const IntRFactorization z = factorization_intr(phi, 2, ctx);
    out.split = std::make_pair(z.factors[0], z.factors[1]);
  }
  return out;
}

std::set<long> length_set_D(const FieldElement& x, const MonoidSpec& spec) {
  const GroupElement v = valuation(x);
  const auto away = is_bounded_away_from_zero(spec);
  if (!away) throw PreconditionError("monoid is not bounded away from 0");
  std::set<long> out;
  if (v.sign() <= 0) return out;
  long cap = 0;
  while (compare(away->bound * Rational(cap + 1), v) <= 0) ++cap;
  for (long l = 1; l <= cap; ++l) {
    try {
      factor_in_D(x, spec, l);
      out.insert(l);
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

LengthSet length_set_intr(const IntRElement& phi, const GadgetContext& ctx) {
  require_one_gap(ctx.spec);
  require_member(phi);
  if (!phi.profile.exact() || !phi.alpha) throw PreconditionError("length set needs an exact profile");
  const GroupElement& alpha = *phi.alpha;
  if (compare(alpha, GroupElement(1)) < 0) throw PreconditionError("alpha < 1: the element is a unit");
  if (compare(alpha, GroupElement(2)) < 0) return LengthSet::range(1, 1);
  return LengthSet::range(2, alpha.floor().get_si());
}

IntRFactorization factorization_intr(const IntRElement& phi, long length, const GadgetContext& ctx) {
  require_member(phi);
  IntRFactorization z;
  if (!phi.is_constant()) {
    require_one_gap(ctx.spec);
    z = factor_nonconstant(phi, length, ctx);
  } else {
    const FieldElement d = phi.func.constant_value();
    const std::set<long> d_lengths = length_set_D(d, ctx.spec);
    if (d_lengths.count(length)) {
      DFactorization f = factor_in_D(d, ctx.spec, length);
      std::vector<IntRElement> factors;
      for (const auto& x : f.factors) factors.push_back(make_constant(x, ctx));
      z = make_intr_factorization(std::move(factors), ctx);
    } else {
      const auto alpha = find_integrally_terminal(ctx.spec);
      if (!alpha) throw PreconditionError("monoid has no integral terminality bound");
      const GroupElement v = valuation(d);
      // N = min{n : n alpha > v}
      long n = 1;
      while (compare(*alpha * Rational(n), v) <= 0) ++n;
      if (length < 2 || length > n - 2) {
        throw PreconditionError("length " + std::to_string(length) + " is not realizable for value " + v.to_string());
      }
      z = zigzag_length(phi, length, *alpha, ctx);
    }
  }
  if (!(z.product() == phi.func)) throw std::logic_error("factorization does not multiply back");
  return z;
}

LengthBounds extend_length_bounds(const FieldElement& d, const GadgetContext& ctx, const GroupElement& alpha,
                                  const GroupElement& beta) {
  const MonoidSpec& spec = ctx.spec;
  const Lattice& lattice = ctx.lattice();
  const GroupElement v = valuation(d);
  if (compare(v, alpha * Rational(3)) <= 0) throw PreconditionError("need v(d) > 3 alpha");
  if (!in_group(alpha, lattice) || !in_group(beta, lattice)) throw PreconditionError("alpha and beta must lie in Gamma");
  if (beta.sign() <= 0 || compare(beta, alpha) >= 0) throw PreconditionError("need 0 < beta < alpha");
  if (!spec.contains(alpha) || !is_integrally_terminal_for(spec, alpha).terminal) {
    throw PreconditionError("M is not integrally terminal at alpha");
  }
  if (!IntervalSet({Interval::open(beta, alpha)}).intersect(spec.positive_part()).lattice_empty(lattice)) {
    throw PreconditionError("(beta, alpha) meets M");
  }
  if (!has_no_minimal_positive(lattice)) throw PreconditionError("Gamma has a minimal positive element");
  const IntRElement de = make_constant(d, ctx);
  require_member(de);

  LengthBounds out;
  out.d_lengths = length_set_D(d, spec);
  if (out.d_lengths.empty()) throw PreconditionError("d has no factorization in D");
  out.upper = *out.d_lengths.rbegin();
  long n = 1;
  while (compare(alpha * Rational(n), v) <= 0) ++n;
  out.N = n;
  out.lower = out.d_lengths;
  for (long l = 2; l <= out.N - 2; ++l) {
    out.lower.insert(l);
    out.witnesses.push_back(zigzag_length(de, l, alpha, ctx));
    if (!(out.witnesses.back().product() == de.func)) throw std::logic_error("witness does not multiply back");
  }
  return out;
}

Verdict associate_intr(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx) {
  if (f.func == g.func) return Verdict::Yes;
  if (f.is_constant() && g.is_constant()) {
    return associate_in_D(f.func.constant_value(), g.func.constant_value(), ctx.spec);
  }
  const ValueProfile q = f.profile - g.profile;
  if (!q.generic.is_zero()) return Verdict::No;
  return Verdict::Unknown;
}

Distance distance_intr(const IntRFactorization& z1, const IntRFactorization& z2, const GadgetContext& ctx) {
  Distance d;
  std::vector<bool> used(z2.factors.size(), false);
  long common = 0;
  for (const auto& a : z1.factors) {
    for (std::size_t j = 0; j < z2.factors.size(); ++j) {
      if (used[j]) continue;
      const Verdict v = associate_intr(a, z2.factors[j], ctx);
      if (v == Verdict::Unknown) d.certified = false;
      if (v == Verdict::Yes) {
        used[j] = true;
        ++common;
        break;
      }
    }
  }
  d.value = std::max(static_cast<long>(z1.factors.size()), static_cast<long>(z2.factors.size())) - common;
  return d;
}

IntRFactorization canonical_intr(const FieldElement& d, const GadgetContext& ctx) {
  require_one_gap(ctx.spec);
  const DFactorization f = canonical_factorization(d, ctx.spec);
  std::vector<IntRElement> factors;
  for (const auto& x : f.factors) factors.push_back(make_constant(x, ctx));
  return make_intr_factorization(std::move(factors), ctx);
}

namespace {

std::vector<IntRFactorization> chain_to_canonical(const FieldElement& d, const IntRFactorization& z,
                                                  const GadgetContext& ctx) {
  const IntRElement t = make_constant(t_pow(ctx, 1), ctx);
  std::vector<IntRFactorization> chain{z};
  while (true) {
    const auto& cur = chain.back().factors;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (associate_intr(cur[i], t, ctx) != Verdict::Yes) others.push_back(i);
    }
    if (others.size() < 2) break;
    const std::size_t i = others[0], j = others[1];
    const IntRElement pair = multiply(cur[i], cur[j], ctx);
    const IntRElement rest = divide(pair, t, ctx);
    std::vector<IntRElement> next;
    next.push_back(t);
    if (compare(*pair.alpha, GroupElement(3)) < 0) {
      next.push_back(rest);
    } else {
      const IntRFactorization split = factorization_intr(rest, 2, ctx);
      next.insert(next.end(), split.factors.begin(), split.factors.end());
    }
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (k != i && k != j) next.push_back(cur[k]);
    }
    chain.push_back(make_intr_factorization(std::move(next), ctx));
  }
  IntRFactorization canon = canonical_intr(d, ctx);
  const Distance last = distance_intr(chain.back(), canon, ctx);
  if (last.value != 0 || !last.certified) chain.push_back(std::move(canon));
  return chain;
}

}  // namespace

std::vector<IntRFactorization> chain_intr(const FieldElement& d, const IntRFactorization& z1,
                                          const IntRFactorization& z2, const GadgetContext& ctx) {
  require_one_gap(ctx.spec);
  const RationalFunction target(d);
  if (!(z1.product() == target) || !(z2.product() == target)) throw PreconditionError("factorizations of another element");
  const Distance direct = distance_intr(z1, z2, ctx);
  if (direct.certified && direct.value == 0) return {z1};
  if (compare(valuation(d), GroupElement(3)) < 0) throw PreconditionError("chains need v(d) >= 3");
  std::vector<IntRFactorization> a = chain_to_canonical(d, z1, ctx);
  std::vector<IntRFactorization> b = chain_to_canonical(d, z2, ctx);
  b.pop_back();
  a.insert(a.end(), b.rbegin(), b.rend());
  return a;
}

}  // namespace intr
