#include "intr/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "intr/dvr_finite_e.hpp"
#include "intr/intr_factorization.hpp"
#include "intr/parse.hpp"

namespace intr {

namespace {

using Rng = std::mt19937_64;

const CoefficientField QQ = CoefficientField::rationals();
const CoefficientField F2 = CoefficientField::prime(2);

class Outcome {
 public:
  template <class F>
  void require(bool ok, F&& describe) {
    if (ok) return;
    passed_ = false;
    if (bad_.size() < 5) bad_.push_back(describe());
  }
  void count(long n = 1) { cases_ += n; }
  void note(std::string s) { detail_ = std::move(s); }

  bool passed() const { return passed_; }
  long cases() const { return cases_; }
  const std::vector<std::string>& bad() const { return bad_; }
  const std::string& detail() const { return detail_; }

 private:
  bool passed_ = true;
  long cases_ = 0;
  std::vector<std::string> bad_;
  std::string detail_;
};

GroupElement frac(long n, long d = 1) { return GroupElement(Rational(n) / Rational(d)); }

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// n/d with n in [lo*d, hi*d] and d in [1, maxden].
GroupElement random_rational(Rng& rng, long lo, long hi, long maxden) {
  const long d = pick(rng, 1, maxden);
  return frac(pick(rng, lo * d, hi * d), d);
}

GadgetContext context(const MonoidSpec& spec, CoefficientField field) {
  GadgetContext ctx;
  ctx.spec = spec;
  ctx.field = field;
  return ctx;
}

// A positive exponent in the lattice for perturbation terms.
GroupElement small_positive(Rng& rng, const Lattice& lattice) {
  switch (lattice.kind()) {
    case Lattice::Kind::Integers: return pick(rng, 1, 3);
    case Lattice::Kind::QuadraticIntegers:
      return pick(rng, 0, 2) ? GroupElement(pick(rng, 1, 2)) : GroupElement::sqrt(lattice.radicand());
    default: return frac(pick(rng, 1, 6), pick(rng, 1, 3));
  }
}

// c0 + c1 t^e1 + c2 t^e2 with c0 != 0 and e_i > 0.
FieldElement random_unit(Rng& rng, CoefficientField field, const Lattice& lattice) {
  const long lead = field.finite() ? pick(rng, 1, field.p - 1) : pick(rng, 1, 5) * (pick(rng, 0, 1) ? 1 : -1);
  FieldElement u = FieldElement::constant(field, lead);
  for (int k = pick(rng, 0, 2); k > 0; --k) {
    u = u + FieldElement::constant(field, pick(rng, 1, 4)) * FieldElement::t(field, small_positive(rng, lattice));
  }
  return u;
}

FieldElement random_point(Rng& rng, CoefficientField field, const Lattice& lattice, const GroupElement& gamma) {
  return random_unit(rng, field, lattice) * FieldElement::t(field, gamma);
}

// About `count` lattice points covering every breakpoint of the profile with
// a margin of 2 on both sides.
std::vector<GroupElement> grid_points(const ValueProfile& p, std::size_t count) {
  const Lattice& lattice = p.lattice;
  std::vector<GroupElement> marks = p.generic.breakpoints();
  for (const auto& o : p.overrides) marks.push_back(o.at);
  GroupElement lo = -3, hi = 3;
  if (!marks.empty()) {
    lo = marks.front();
    hi = marks.front();
    for (const auto& m : marks) {
      lo = min(lo, m);
      hi = max(hi, m);
    }
    lo -= 2;
    hi += 2;
  }
  std::vector<GroupElement> out;
  if (!lattice.dense()) {
    const long a = lo.floor().get_si(), b = hi.ceil().get_si();
    const long width = b - a + 1;
    const long start = width >= static_cast<long>(count) ? a : a - (static_cast<long>(count) - width) / 2;
    for (long n = start; static_cast<long>(out.size()) < std::max<long>(width, count); ++n) out.push_back(n);
  } else {
    const Rational steps(static_cast<long>(count - 1));
    const GroupElement span = hi - lo;
    const GroupElement h = span / (steps * 2);
    for (std::size_t i = 0; i < count; ++i) {
      const GroupElement x = lo + span * (Rational(static_cast<long>(i)) / steps);
      if (in_group(x, lattice)) {
        out.push_back(x);
      } else if (auto g = simple_lattice_point(x - h, x + h, lattice)) {
        out.push_back(*g);
      }
    }
  }
  for (const auto& m : marks) {
    if (in_group(m, lattice)) out.push_back(m);
  }
  return out;
}

// Direct evaluation at a point with v(a) = gamma lands in the declared range.
bool matches_profile(const IntRElement& e, const GroupElement& gamma, const FieldElement& a, std::string* why) {
  const ValueRange range = e.profile.at(gamma);
  FieldElement value;
  try {
    value = e.func.evaluate(a);
  } catch (const PreconditionError&) {
    if (!range.lo) return true;
    *why = "pole at a = " + a.to_string();
    return false;
  }
  if (value.is_zero()) {
    if (!range.hi) return true;
    *why = "zero at a = " + a.to_string();
    return false;
  }
  const GroupElement v = valuation(value);
  if (range.contains(v)) return true;
  *why = "v(phi(a)) = " + v.to_string() + " outside " + range.to_string() + " at gamma = " + gamma.to_string();
  return false;
}

std::string describe(const IntRElement& e) {
  std::string s = e.kind;
  for (const auto& p : e.params) s += " " + p.name + "=" + p.value;
  return s;
}

// 1. Closed form against brute force on the one-gap monoid.
void criterion_lengths(Outcome& o, Rng&) {
  const MonoidSpec spec = MonoidSpec::one_gap();
  for (long q : {1, 2, 3, 4, 6}) {
    for (long k = q; k <= 12 * q; ++k) {
      const GroupElement v = frac(k, q);
      const LengthSet cf = length_set_closed_form(spec, v);
      const BruteForceLengths bf = length_set_bruteforce(spec, v, q);
      o.count();
      o.require(!bf.cap_exceeded, [&] { return "brute force cap exceeded at v = " + v.to_string(); });
      o.require(cf == bf.lengths, [&] {
        return "v = " + v.to_string() + " q = " + std::to_string(q) + ": closed form " + cf.to_string() +
               ", brute force " + bf.lengths.to_string();
      });
      const Integer lower = (v / Rational(2)).floor() + 1;
      o.require(cf.min == lower.get_si(), [&] { return "lower endpoint at v = " + v.to_string(); });
    }
  }
}

FieldElement sample_constant(CoefficientField field, const GroupElement& v) {
  return FieldElement::t(field, v) * (FieldElement::constant(field, 1) + FieldElement::t(field, frac(1, 2)));
}

// 2. Chains to the canonical factorization, and distance-2 pairs below 3.
void criterion_catenary(Outcome& o, Rng& rng) {
  const MonoidSpec spec = MonoidSpec::one_gap();
  for (int s = 0; s < 20; ++s) {
    const GroupElement v = random_rational(rng, 3, 12, 4);
    const FieldElement x = sample_constant(QQ, v);
    const std::set<long> lengths_set = length_set_D(x, spec);
    const std::vector<long> lengths(lengths_set.begin(), lengths_set.end());
    const DFactorization canon = canonical_factorization(x, spec);
    for (int r = 0; r < 5; ++r) {
      const long l = lengths[pick(rng, 0, static_cast<long>(lengths.size()) - 1)];
      const DFactorization z = factor_in_D(x, spec, l);
      const auto chain = three_chain(x, z, spec);
      o.count();
      const std::string where = "v = " + v.to_string() + ", length " + std::to_string(l);
      o.require(!chain.empty() && distance(chain.back(), canon, spec).value == 0,
                [&] { return where + ": chain does not end at the canonical factorization"; });
      for (std::size_t i = 0; i < chain.size(); ++i) {
        o.require(chain[i].product() == x, [&] { return where + ": chain element does not multiply back"; });
        if (i + 1 == chain.size()) break;
        const Distance d = distance(chain[i], chain[i + 1], spec);
        o.require(d.certified && d.value <= 3,
                  [&] { return where + ": step distance " + std::to_string(d.value); });
      }
    }
  }
  for (const GroupElement& v : {frac(2), frac(9, 4), frac(5, 2), frac(8, 3), frac(11, 4), frac(17, 6)}) {
    GroupElement a = random_rational(rng, 1, 2, 8), b = a;
    while (compare(a, frac(1)) <= 0 || compare(a, frac(2)) >= 0) a = random_rational(rng, 1, 2, 8);
    while (b == a || compare(b, frac(1)) <= 0 || compare(b, frac(2)) >= 0) b = random_rational(rng, 1, 2, 8);
    const FieldElement t = FieldElement::t(QQ, 1);
    const FieldElement d = FieldElement::t(QQ, v);
    const FieldElement fa = t + FieldElement::t(QQ, a), fb = t + FieldElement::t(QQ, b);
    const DFactorization z1 = make_d_factorization({fa, d / fa}, spec);
    const DFactorization z2 = make_d_factorization({fb, d / fb}, spec);
    const std::string where = "v = " + v.to_string() + ", alpha = " + a.to_string() + ", beta = " + b.to_string();
    o.count();
    o.require(!spec.contains(min(a - 1, b - 1)), [&] { return where + ": certificate exponent lies in M"; });
    for (const auto* z : {&z1, &z2}) {
      for (Verdict f : z->atom_flags) o.require(f == Verdict::Yes, [&] { return where + ": factor is not an atom"; });
    }
    o.require(associate_in_D(fa, fb, spec) == Verdict::No, [&] { return where + ": factors not certified non-associate"; });
    const Distance dist = distance(z1, z2, spec);
    o.require(dist.certified && dist.value == 2, [&] { return where + ": distance " + std::to_string(dist.value); });
  }
}

// 3. Envelopes against the pointwise minimum; the generic-value law.
void criterion_envelope(Outcome& o, Rng& rng) {
  for (int fam = 0; fam < 500; ++fam) {
    std::vector<std::pair<long, GroupElement>> lines;
    for (long i = 0; i <= 8; ++i) {
      if (pick(rng, 0, 2) == 0 && !(i == 8 && lines.empty())) continue;
      lines.push_back({i, random_rational(rng, -6, 6, 6)});
    }
    const PiecewiseLinear env = envelope(lines);
    for (int k = 0; k < 50; ++k) {
      const GroupElement x = random_rational(rng, -8, 8, 12);
      GroupElement best = lines.front().second + x * Rational(lines.front().first);
      for (const auto& [n, c] : lines) best = min(best, c + x * Rational(n));
      o.count();
      o.require(env.evaluate(x) == best, [&] { return "envelope differs from the minimum at x = " + x.to_string(); });
    }
  }
  const Lattice Q = Lattice::rationals();
  for (int f = 0; f < 100; ++f) {
    auto side = [&](long max_degree) {
      std::vector<FieldElement> cs;
      const long deg = pick(rng, 0, max_degree);
      for (long i = 0; i <= deg; ++i) {
        if (i < deg && pick(rng, 0, 3) == 0) {
          cs.push_back(FieldElement::constant(QQ, 0));
          continue;
        }
        cs.push_back(random_point(rng, QQ, Q, random_rational(rng, -3, 3, 4)));
      }
      return XPoly(cs);
    };
    const XPoly num = side(4);
    const XPoly den = side(3);
    const RationalFunction phi(num, den);
    const PiecewiseLinear mv = minval_of(phi);
    const std::vector<GroupElement> exc = exceptional_abscissas(phi);
    int done = 0;
    while (done < 50) {
      const GroupElement g = random_rational(rng, -5, 5, 12);
      if (std::find(exc.begin(), exc.end(), g) != exc.end()) continue;
      ++done;
      o.count();
      const FieldElement a = random_point(rng, QQ, Q, g);
      FieldElement value;
      try {
        value = phi.evaluate(a);
      } catch (const PreconditionError&) {
        o.require(false, [&] { return "pole off the exceptional set for " + phi.to_string(); });
        continue;
      }
      o.require(!value.is_zero() && valuation(value) == mv.evaluate(g), [&] {
        return "generic value law fails for " + phi.to_string() + " at a = " + a.to_string();
      });
    }
  }
}

void check_gadget(Outcome& o, Rng& rng, const IntRElement& e, CoefficientField field) {
  for (const GroupElement& g : grid_points(e.profile, 200)) {
    const FieldElement a = random_point(rng, field, e.profile.lattice, g);
    std::string why;
    o.count();
    o.require(matches_profile(e, g, a, &why), [&] { return describe(e) + ": " + why; });
  }
}

// 4. Gadget profiles by direct evaluation.
void criterion_gadgets(Outcome& o, Rng& rng) {
  for (const Lattice& L : {Lattice::integers(), Lattice::rationals()}) {
    for (int s = 0; s < 10; ++s) {
      const GroupElement vb = L.dense() ? random_rational(rng, -2, 2, 3) : GroupElement(pick(rng, -2, 2));
      GroupElement tau = L.dense() ? random_rational(rng, 0, 3, 3) : GroupElement(pick(rng, 1, 3));
      if (tau.sign() <= 0) tau = 1;
      const FieldElement b = random_point(rng, QQ, L, vb);
      check_gadget(o, rng, gadget_stone_weierstrass(b, tau, L), QQ);
    }
  }
  for (CoefficientField field : {F2, QQ}) {
    const GadgetContext ctx = context(MonoidSpec::one_gap(), field);
    for (int s = 0; s < 10; ++s) {
      const GroupElement alpha = random_rational(rng, 0, 3, 4);
      GroupElement gap = random_rational(rng, 0, 3, 4);
      if (gap.sign() <= 0) gap = frac(1, 2);
      const IntRElement z = gadget_zigzag({alpha, alpha + gap, 1, ZigZagCase::UnitPolynomial}, ctx);
      check_gadget(o, rng, z, field);
    }
  }
  const Lattice R2 = Lattice::quadratic_integers(2);
  const GadgetContext ctx = context(MonoidSpec::one_gap(R2), QQ);
  for (int s = 0; s < 10; ++s) {
    GroupElement alpha(pick(rng, 0, 3), pick(rng, -1, 1), 2);
    if (alpha.sign() < 0) alpha = -alpha;
    GroupElement gap = random_rational(rng, 0, 3, 4);
    if (compare(gap, frac(1, 2)) < 0) gap = frac(1, 2);
    GroupElement eps = random_rational(rng, 0, 1, 6);
    if (eps.sign() <= 0) eps = frac(1, 3);
    const GroupElement alpha_prime = alpha + gap;
    const IntRElement z = gadget_zigzag({alpha, alpha_prime, eps, ZigZagCase::PthPower}, ctx);
    GroupElement plateau;
    for (const auto& p : z.params) {
      if (p.name == "alpha''") plateau = parse_group_element(p.value);
    }
    o.require(compare(alpha_prime - eps, plateau) < 0 && compare(plateau, alpha_prime) <= 0,
              [&] { return describe(z) + ": plateau outside (alpha'-eps, alpha']"; });
    o.require(z.profile.at_zero() && *z.profile.at_zero() == plateau,
              [&] { return describe(z) + ": profile does not end at the plateau"; });
    check_gadget(o, rng, z, QQ);
  }
}

// 5. Lengths {2..floor(v)} (or {1}) in IntR(K,D).
void criterion_intr_lengths(Outcome& o, Rng&) {
  const GadgetContext ctx = context(MonoidSpec::one_gap(), QQ);
  for (long k = 2; k <= 16; ++k) {
    const GroupElement v = frac(k, 2);
    const long top = v.floor().get_si();
    std::set<long> expected;
    if (top < 2) {
      expected = {1};
    } else {
      for (long l = 2; l <= top; ++l) expected.insert(l);
    }
    for (const FieldElement& d : {FieldElement::t(QQ, v), sample_constant(QQ, v)}) {
      const IntRElement de = make_constant(d, ctx);
      const std::string where = "d = " + d.to_string();
      o.require(length_set_intr(de, ctx).values() == expected, [&] { return where + ": wrong length set"; });
      std::set<long> found;
      for (long l = 1; l <= top + 1; ++l) {
        IntRFactorization z;
        try {
          z = factorization_intr(de, l, ctx);
        } catch (const PreconditionError&) {
          continue;
        }
        found.insert(l);
        o.count();
        o.require(static_cast<long>(z.length()) == l && z.product() == de.func,
                  [&] { return where + ": length " + std::to_string(l) + " does not multiply back"; });
        for (const auto& f : z.factors) {
          const bool ok = f.membership == Membership::Certified && f.alpha && compare(*f.alpha, frac(1)) >= 0 &&
                          compare(*f.alpha, frac(2)) < 0;
          o.require(ok, [&] { return where + ": factor " + f.func.to_string() + " is not a certified atom"; });
        }
        o.require(z.all_atoms(), [&] { return where + ": atom flags not all Yes"; });
      }
      o.require(found == expected, [&] { return where + ": realized lengths differ from the expected set"; });
    }
  }
}

// 6. Lower and upper length bounds on {0} u [2,3] u [4,inf).
void criterion_sandwich(Outcome& o, Rng&) {
  const GadgetContext ctx = context(MonoidSpec::two_three_four(), QQ);
  const GroupElement alpha = 4, beta = 3;
  for (const GroupElement& v : {frac(13), frac(14), frac(27, 2)}) {
    const FieldElement d = sample_constant(QQ, v);
    const BruteForceLengths bf = length_set_bruteforce(ctx.spec, v, 2);
    const std::set<long> d_lengths = bf.lengths.values();
    long N = 1;
    while (compare(alpha * Rational(N), v) <= 0) ++N;
    const LengthBounds b = extend_length_bounds(d, ctx, alpha, beta);
    const std::string where = "v = " + v.to_string();
    o.count();
    o.require(!bf.cap_exceeded, [&] { return where + ": brute force cap exceeded"; });
    o.require(b.N == N, [&] { return where + ": N = " + std::to_string(b.N); });
    o.require(b.d_lengths == d_lengths, [&] { return where + ": constructive D lengths differ from brute force"; });
    o.require(b.upper == *d_lengths.rbegin(), [&] { return where + ": upper bound differs from max L_D"; });
    std::set<long> witnessed;
    for (const auto& w : b.witnesses) {
      witnessed.insert(static_cast<long>(w.length()));
      o.require(w.all_atoms() && w.product() == RationalFunction(d), [&] { return where + ": bad witness"; });
      o.require(static_cast<long>(w.length()) <= *d_lengths.rbegin(),
                [&] { return where + ": witness longer than max L_D"; });
    }
    for (long l = 2; l <= N - 2; ++l) {
      o.require(witnessed.count(l) && b.lower.count(l), [&] { return where + ": no witness of length " + std::to_string(l); });
    }
    for (long l : d_lengths) {
      o.require(b.lower.count(l) > 0, [&] { return where + ": lower bound misses a D length"; });
      const IntRFactorization z = factorization_intr(make_constant(d, ctx), l, ctx);
      o.require(z.all_atoms() && static_cast<long>(z.length()) <= b.upper,
                [&] { return where + ": D length " + std::to_string(l) + " not realized by atoms"; });
    }
  }
}

// 7. Round trips through the value-vector isomorphism.
void criterion_dvr(Outcome& o, Rng& rng) {
  auto k = [](long c) { return FieldElement::constant(QQ, c); };
  const FieldElement u = FieldElement::t(QQ, 1);
  auto side = [&]() {
    std::vector<FieldElement> cs{k(1)};
    const long deg = pick(rng, 0, 2);
    for (long i = 0; i <= deg; ++i) {
      const FieldElement c = u * k(pick(rng, -3, 3));
      if (i == 0) {
        cs[0] = cs[0] + c;
      } else {
        cs.push_back(c);
      }
    }
    return XPoly(cs);
  };
  const long sizes[] = {1, 2, 3, 5};
  int trips = 0, attempts = 0;
  while (trips < 100 && attempts < 1000) {
    ++attempts;
    const long n = sizes[trips % 4];
    std::vector<FieldElement> pts;
    for (long i = 0; i < n; ++i) pts.push_back(k(pick(rng, -3, 3)) + u * k(pick(rng, -3, 3)));
    DvrContext ctx;
    try {
      ctx = make_dvr_context(QQ, pts);
    } catch (const PreconditionError&) {
      continue;
    }
    std::vector<long> e;
    for (long i = 0; i < n; ++i) e.push_back(pick(rng, 0, 2));
    const RationalFunction unit(side().scaled(k(pick(rng, 1, 4))), side());
    RationalFunction phi = unit;
    for (long i = 0; i < n; ++i) {
      if (e[i]) phi = phi * psi(ctx, i).pow(e[i]);
    }
    DvrFactorization f;
    try {
      f = factor_into_atoms(phi, ctx);
    } catch (const PreconditionError&) {
      continue;  // the unit has a pole or zero on E
    }
    ++trips;
    o.count();
    const std::string where = "E of size " + std::to_string(n) + ", unit " + unit.to_string();
    o.require(f.exponents == e, [&] { return where + ": exponents not recovered"; });
    const RationalFunction inverse(f.unit.den(), f.unit.num());
    o.require(is_unit(f.unit, ctx) && is_unit(inverse, ctx), [&] { return where + ": unit has a nonzero value"; });
    o.require(f.unit == unit, [&] { return where + ": unit not recovered"; });
  }
  o.require(trips == 100, [&] { return "only " + std::to_string(trips) + " round trips in " + std::to_string(attempts); });
}

void check_witness(Outcome& o, Rng& rng, const IntRElement& phi, int branch, const GadgetContext& ctx) {
  const std::string where = "branch " + std::to_string(branch) + ", " + describe(phi);
  AntimatterWitness w;
  try {
    w = antimatter_witness(phi, branch, ctx);
  } catch (const Error& e) {
    o.require(false, [&] { return where + ": " + e.what(); });
    return;
  }
  o.count();
  o.require(w.ok(), [&] { return where + ": witness flags not all set"; });
  o.require(w.psi.func * w.quotient.func == phi.func, [&] { return where + ": psi * quotient != phi"; });
  for (const IntRElement* part : {&w.psi, &w.quotient}) {
    for (const GroupElement& g : grid_points(part->profile, 20)) {
      std::string why;
      o.require(matches_profile(*part, g, random_point(rng, ctx.field, ctx.lattice(), g), &why),
                [&] { return where + ": " + why; });
    }
  }
}

// 8. Strict divisor witnesses in all three branches.
void criterion_antimatter(Outcome& o, Rng& rng) {
  const GadgetContext q = context(MonoidSpec::one_gap(), QQ);
  for (int s = 0; s < 10; ++s) {
    IntRElement phi;
    if (s % 2) {
      phi = make_constant(FieldElement::t(QQ, random_rational(rng, 1, 5, 4)), q);
    } else {
      const GroupElement alpha = random_rational(rng, 0, 2, 4);
      phi = gadget_zigzag({alpha, alpha + frac(pick(rng, 1, 6), 2), 1, ZigZagCase::UnitPolynomial}, q);
    }
    check_witness(o, rng, phi, 1, q);
  }
  const Lattice R2 = Lattice::quadratic_integers(2);
  const GadgetContext r = context(MonoidSpec::one_gap(R2), QQ);
  for (int s = 0; s < 10; ++s) {
    IntRElement phi;
    if (s % 2) {
      phi = make_constant(FieldElement::t(QQ, GroupElement(pick(rng, 2, 4), pick(rng, -1, 1), 2)), r);
    } else {
      const GroupElement alpha(pick(rng, 0, 2), 0, 2);
      phi = gadget_zigzag({alpha, alpha + frac(pick(rng, 2, 6), 2), frac(1, pick(rng, 2, 4)), ZigZagCase::PthPower}, r);
    }
    check_witness(o, rng, phi, 2, r);
  }
  const Lattice Z = Lattice::integers();
  const GadgetContext z = context(MonoidSpec::one_gap(Z), QQ);
  for (int s = 0; s < 10; ++s) {
    IntRElement phi;
    if (s % 2) {
      phi = make_constant(FieldElement::t(QQ, pick(rng, 1, 5)), z);
    } else {
      // tau/3 must avoid Z, otherwise the quotient has poles on Gamma
      const long tau = 3 * pick(rng, 0, 1) + pick(rng, 1, 2);
      phi = gadget_stone_weierstrass(FieldElement::t(QQ, pick(rng, 0, 3)), tau, Z);
    }
    check_witness(o, rng, phi, 3, z);
  }
}

// 9. Certificates of membership in D.
void criterion_normalize(Outcome& o, Rng& rng) {
  for (const MonoidSpec& spec : {MonoidSpec::one_gap(), MonoidSpec::two_three_four()}) {
    const GroupElement delta = *find_integrally_terminal(spec);
    auto poly = [&](int terms) {
      FieldElement p = FieldElement::constant(QQ, 1);
      for (int i = 0; i < terms; ++i) {
        p = p + FieldElement::constant(QQ, pick(rng, -4, 4)) * FieldElement::t(QQ, frac(pick(rng, 1, 12), pick(rng, 2, 6)));
      }
      return p;
    };
    for (int s = 0; s < 50; ++s) {
      GroupElement w = delta + random_rational(rng, 0, 3, 6);
      if (w == delta) w += frac(1, 7);
      FieldElement den = poly(pick(rng, 1, 3));
      if (den.is_zero() || !valuation(den).is_zero()) den = FieldElement::constant(QQ, 1) + FieldElement::t(QQ, frac(1, 2));
      const FieldElement c = FieldElement::t(QQ, w) * poly(pick(rng, 0, 3)) / den;
      if (c.is_zero()) continue;
      const DCertificate cert = normalize_to_D(c, spec);
      const std::string where = spec.to_string() + ", c = " + c.to_string();
      o.count();
      o.require(cert.in_D, [&] { return where + ": not certified (" + cert.reason + ")"; });
      o.require(FieldElement(cert.num, cert.den) == c, [&] { return where + ": certificate does not re-evaluate to c"; });
      o.require(cert.num.all_exponents_in(spec) && cert.den.all_exponents_in(spec),
                [&] { return where + ": exponent outside M"; });
      o.require(valuation(cert.den).is_zero(), [&] { return where + ": denominator is not a unit"; });
    }
    const FieldElement example =
        (FieldElement::t(QQ, delta * Rational(13)) + FieldElement::t(QQ, delta * Rational(7)) +
         FieldElement::t(QQ, delta * Rational(3))) /
        (FieldElement::t(QQ, delta / Rational(2)) + FieldElement::constant(QQ, 1));
    o.count();
    o.require(valuation(example) == delta * Rational(3), [&] { return "example value is not 3 delta"; });
    o.require(normalize_to_D(example, spec).in_D, [&] { return "example not certified in D"; });
  }
}

struct Entry {
  CriterionInfo info;
  std::function<void(Outcome&, Rng&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{1, "lengths", "closed-form length sets agree with brute force", 60}, criterion_lengths},
      {{2, "catenary", "3-chains and distance-2 witnesses", 30}, criterion_catenary},
      {{3, "envelope", "envelopes and the generic-value law", 60}, criterion_envelope},
      {{4, "gadgets", "gadget profiles by direct evaluation", 120}, criterion_gadgets},
      {{5, "intr-lengths", "IntR length sets of constants", 120}, criterion_intr_lengths},
      {{6, "sandwich", "length bounds on 0 u [2,3] u [4,inf)", 60}, criterion_sandwich},
      {{7, "dvr", "value-vector round trips over k[u]_(u)", 30}, criterion_dvr},
      {{8, "antimatter", "strict divisor witnesses", 60}, criterion_antimatter},
      {{9, "normalize", "membership certificates for D", 30}, criterion_normalize},
  };
  return all;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > static_cast<int>(entries().size())) throw PreconditionError("no criterion " + std::to_string(id));
  const Entry& entry = entries()[id - 1];
  CriterionResult r;
  r.info = entry.info;
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(o, rng);
  } catch (const std::exception& e) {
    o.require(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks_passed = o.passed();
  r.cases = o.cases();
  r.counterexamples = o.bad();
  r.detail = o.detail();
  return r;
}

std::vector<int> suite_criteria(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "all") {
    for (const auto& e : entries()) ids.push_back(e.info.id);
    return ids;
  }
  for (const auto& e : entries()) {
    if (suite == e.info.name || suite == std::to_string(e.info.id)) return {e.info.id};
  }
  throw ParseError("unknown suite \"" + suite + "\"");
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s  %d %-13s %6ld cases  %7.2f s (limit %.0f s)", r.passed() ? "PASS" : "FAIL",
                r.info.id, r.info.name.c_str(), r.cases, r.seconds, r.info.limit_seconds);
  std::string s = buf;
  if (r.checks_passed && !r.within_limit()) s += "  time limit exceeded";
  return s;
}

}  // namespace intr
