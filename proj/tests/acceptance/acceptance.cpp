// Acceptance run: one PASS/FAIL line per criterion. Each criterion runs the
// library suite and then an independent oracle written here; both must hold
// and the total must stay under the pinned time limit. All checks are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "intr/dvr_finite_e.hpp"
#include "intr/intr_factorization.hpp"
#include "intr/parse.hpp"
#include "intr/verify.hpp"

using namespace intr;

namespace {

constexpr std::uint64_t kSeed = 1;

const CoefficientField QQ = CoefficientField::rationals();
const CoefficientField F2 = CoefficientField::prime(2);

using Rng = std::mt19937_64;

GroupElement frac(long n, long d = 1) { return GroupElement(Rational(n) / Rational(d)); }
long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

struct Oracle {
  long cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

GadgetContext context(const MonoidSpec& spec, CoefficientField field) {
  GadgetContext ctx;
  ctx.spec = spec;
  ctx.field = field;
  return ctx;
}

FieldElement unit_times_t(Rng& rng, CoefficientField field, const GroupElement& gamma) {
  FieldElement u = FieldElement::constant(field, field.finite() ? 1 : pick(rng, 1, 4));
  u = u + FieldElement::constant(field, 1) * FieldElement::t(field, pick(rng, 1, 2));
  return u * FieldElement::t(field, gamma);
}

// Exact sets of sums: can target be written as a sum of exactly l integers
// from [lo, hi]? Sliding-window reachability.
bool sum_of_exactly(long target, long l, long lo, long hi) {
  std::vector<char> cur(target + 1, 0);
  cur[0] = 1;
  for (long j = 0; j < l; ++j) {
    std::vector<long> prefix(target + 2, 0);
    for (long s = 0; s <= target; ++s) prefix[s + 1] = prefix[s] + cur[s];
    std::vector<char> next(target + 1, 0);
    for (long s = 0; s <= target; ++s) {
      const long a = s - hi, b = s - lo;  // previous sum in [a, b]
      if (b < 0) continue;
      next[s] = prefix[b + 1] - prefix[std::max(a, 0L)] > 0;
    }
    cur.swap(next);
  }
  return cur[target] != 0;
}

// Lengths over the grid (1/(q l))Z with atom values in [lo, hi) (one-gap) or
// [lo, hi] (two-three-four), by reachability on integers.
std::set<long> oracle_lengths(const GroupElement& v, long q, long lo, long hi, bool closed_top) {
  std::set<long> out;
  const Rational vr = v.rational_part();
  const long lmax = GroupElement(vr / lo).floor().get_si() + 1;
  for (long l = 1; l <= lmax; ++l) {
    const long n = q * l;
    const Rational target = vr * n;
    if (target.get_den() != 1) continue;
    const long top = closed_top ? hi * n : hi * n - 1;
    if (sum_of_exactly(target.get_num().get_si(), l, lo * n, top)) out.insert(l);
  }
  return out;
}

// 1
void oracle_lengths_one_gap(Oracle& o, Rng&) {
  const MonoidSpec spec = MonoidSpec::one_gap();
  for (long q : {1, 2, 3, 4, 6}) {
    for (long k = q; k <= 12 * q; ++k) {
      const GroupElement v = frac(k, q);
      const std::set<long> expected = oracle_lengths(v, q, 1, 2, false);
      o.check(length_set_closed_form(spec, v).values() == expected, "closed form at v = " + v.to_string());
      o.check(length_set_bruteforce(spec, v, q).lengths.values() == expected, "brute force at v = " + v.to_string());
      o.check(*expected.begin() == (v / Rational(2)).floor().get_si() + 1, "lower endpoint at v = " + v.to_string());
    }
  }
}

// 2: the non-association certificate by hand: v(a/b - 1) = min(alpha-1, beta-1) < 1.
void oracle_catenary(Oracle& o, Rng& rng) {
  const MonoidSpec spec = MonoidSpec::one_gap();
  for (int s = 0; s < 20; ++s) {
    const long a = pick(rng, 9, 15), b = pick(rng, 9, 15);
    if (a == b) continue;
    const GroupElement alpha = frac(a, 8), beta = frac(b, 8);
    const FieldElement t = FieldElement::t(QQ, 1);
    const FieldElement fa = t + FieldElement::t(QQ, alpha), fb = t + FieldElement::t(QQ, beta);
    const FieldElement diff = fa / fb - FieldElement::constant(QQ, 1);
    const GroupElement m = min(alpha, beta) - 1;
    o.check(valuation(diff) == m && compare(m, frac(1)) < 0 && m.sign() > 0, "certificate for " + alpha.to_string());
    const FieldElement d = FieldElement::t(QQ, frac(pick(rng, 8, 11), 4));
    const DFactorization z1 = make_d_factorization({fa, d / fa}, spec);
    const DFactorization z2 = make_d_factorization({fb, d / fb}, spec);
    // No factor of z1 is associated to one of z2, so the gcd is empty.
    o.check(distance(z1, z2, spec).value == 2, "distance for " + alpha.to_string() + ", " + beta.to_string());
  }
  const FieldElement x = FieldElement::t(QQ, 10);
  const DFactorization z = factor_in_D(x, spec, 6);
  const auto chain = three_chain(x, z, spec);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    FieldElement prod = FieldElement::constant(QQ, 1);
    for (const auto& f : chain[i].factors) prod = prod * f;
    o.check(prod == x, "chain element for t^10 does not multiply back");
    if (i + 1 == chain.size()) break;
    // the distance bounds the change in length
    const long di = static_cast<long>(chain[i].factors.size()), dj = static_cast<long>(chain[i + 1].factors.size());
    o.check(std::abs(di - dj) <= 3, "chain step for t^10 changes the length by more than 3");
  }
  o.check(!chain.empty() && chain.back().factors.size() == 10, "chain for t^10 does not end at length 10");
  o.check(catenary_closed_form(spec, 10) == 3, "c_D(t^10) = 3");
}

// 3: envelope and generic values against hand evaluation.
void oracle_envelope(Oracle& o, Rng& rng) {
  for (int fam = 0; fam < 100; ++fam) {
    std::vector<std::pair<long, GroupElement>> lines;
    const long deg = pick(rng, 0, 8);
    for (long i = 0; i <= deg; ++i) lines.push_back({i, frac(pick(rng, -30, 30), pick(rng, 1, 6))});
    const PiecewiseLinear env = envelope(lines);
    o.check(env.concave(), "envelope is not concave");
    for (int k = 0; k < 50; ++k) {
      const GroupElement x = frac(pick(rng, -96, 96), 12);
      GroupElement best = lines[0].second;
      for (const auto& [n, c] : lines) {
        const GroupElement y = c + x * Rational(n);
        if (compare(y, best) < 0) best = y;
      }
      o.check(env.evaluate(x) == best, "envelope at " + x.to_string());
    }
  }
  // phi = sum c_i x^i with c_i = t^(e_i): for a = t^g off the breakpoints the
  // least exponent of phi(a) is min_i(e_i + i g).
  for (int f = 0; f < 30; ++f) {
    std::vector<FieldElement> cs;
    std::vector<std::pair<long, GroupElement>> lines;
    for (long i = 0; i <= 4; ++i) {
      const GroupElement e = frac(pick(rng, -6, 6), 2);
      cs.push_back(FieldElement::t(QQ, e));
      lines.push_back({i, e});
    }
    const XPoly p(cs);
    const PiecewiseLinear env = envelope(lines);
    for (int k = 0; k < 20; ++k) {
      long num = 7;
      while (num % 7 == 0) num = 2 * pick(rng, -30, 30) + 1;
      const GroupElement g = frac(num, 7);  // breakpoints have denominators dividing 24
      const FieldElement value = p.evaluate(unit_times_t(rng, QQ, g));
      o.check(!value.is_zero() && valuation(value) == env.evaluate(g), "generic value at " + g.to_string());
    }
  }
}

// Closed-form profiles of the constructions.
GroupElement sw_value(const GroupElement& vb, const GroupElement& tau, const GroupElement& g) {
  const GroupElement x = g * Rational(3);
  const GroupElement b3 = vb * Rational(3);
  return min(x, b3 + tau * Rational(2)) - min(x, b3 + tau);
}

// 4
void oracle_gadgets(Oracle& o, Rng& rng) {
  for (int s = 0; s < 10; ++s) {
    const GroupElement vb = frac(pick(rng, -6, 6), 3), tau = frac(pick(rng, 1, 9), 3);
    const IntRElement sw = gadget_stone_weierstrass(FieldElement::t(QQ, vb), tau, Lattice::rationals());
    for (long k = -40; k <= 40; ++k) {
      const GroupElement g = vb + frac(k, 10);
      if (!sw.profile.at(g).is_point()) continue;
      o.check(sw.profile.generic.evaluate(g) == sw_value(vb, tau, g), "SW profile at " + g.to_string());
    }
  }
  for (CoefficientField field : {F2, QQ}) {
    const GadgetContext ctx = context(MonoidSpec::one_gap(), field);
    const long n = default_unit_valued_poly(field).degree();
    for (int s = 0; s < 10; ++s) {
      const GroupElement a = frac(pick(rng, 0, 12), 4), ap = a + frac(pick(rng, 1, 12), 4);
      const IntRElement z = gadget_zigzag({a, ap, 1, ZigZagCase::UnitPolynomial}, ctx);
      const GroupElement w = (ap - a) / Rational(n);
      for (long k = -40; k <= 80; ++k) {
        const GroupElement g = frac(k, 20);
        // alpha below 0, alpha + n g on [0, w], alpha' above
        const GroupElement expected = g.sign() <= 0 ? a : (compare(g, w) >= 0 ? ap : a + g * Rational(n));
        o.check(z.profile.at(g).is_point() && *z.profile.at(g).lo == expected, "zig-zag profile at " + g.to_string());
      }
    }
  }
  const Lattice R2 = Lattice::quadratic_integers(2);
  const GadgetContext ctx = context(MonoidSpec::one_gap(R2), QQ);
  for (int s = 0; s < 10; ++s) {
    const GroupElement a = pick(rng, 0, 3), ap = a + frac(pick(rng, 2, 8), 2), eps = frac(1, pick(rng, 1, 5));
    const IntRElement z = gadget_zigzag({a, ap, eps, ZigZagCase::PthPower}, ctx);
    GroupElement a2;
    for (const auto& p : z.params) {
      if (p.name == "alpha''") a2 = parse_group_element(p.value);
    }
    o.check(compare(ap - eps, a2) < 0 && compare(a2, ap) <= 0 && in_group(a2, R2), "plateau " + a2.to_string());
    // (b x^2 + b c t) / (x^2 + t) with v(b) = alpha, v(c) = alpha'' - alpha
    for (long i = -6; i <= 12; ++i) {
      for (long j = -2; j <= 2; ++j) {
        const GroupElement g(i, j, 2);
        const GroupElement expected = min(a + g * Rational(2), a2 + 1) - min(g * Rational(2), GroupElement(1));
        o.check(z.profile.at(g).is_point() && *z.profile.at(g).lo == expected, "square zig-zag at " + g.to_string());
      }
    }
  }
}

// 5
void oracle_intr_lengths(Oracle& o, Rng&) {
  const GadgetContext ctx = context(MonoidSpec::one_gap(), QQ);
  for (long k = 4; k <= 16; ++k) {
    const GroupElement v = frac(k, 2);
    const IntRElement d = make_constant(FieldElement::t(QQ, v), ctx);
    for (long l = 2; l <= k / 2; ++l) {
      const IntRFactorization z = factorization_intr(d, l, ctx);
      // the values of the factors at a = 0 add up to v
      GroupElement total = 0;
      for (const auto& f : z.factors) total += valuation(f.func.evaluate(FieldElement::constant(QQ, 0)));
      o.check(total == v, "values at 0 do not add up for v = " + v.to_string());
      RationalFunction prod = z.factors[0].func;
      for (std::size_t i = 1; i < z.factors.size(); ++i) prod = prod * z.factors[i].func;
      Rng rng(static_cast<std::uint64_t>(k * 100 + l));
      const FieldElement a = unit_times_t(rng, QQ, frac(pick(rng, -4, 4), 3));
      o.check(prod.evaluate(a) == d.func.evaluate(a), "product differs at a point for v = " + v.to_string());
    }
  }
}

// 6: atoms of {0} u [2,3] u [4,inf) are [2,3]; lengths by reachability.
void oracle_sandwich(Oracle& o, Rng&) {
  const GadgetContext ctx = context(MonoidSpec::two_three_four(), QQ);
  o.check(monoid_atoms(ctx.spec) == IntervalSet({Interval::closed(2, 3)}), "atoms are [2,3]");
  for (const GroupElement& v : {frac(13), frac(14), frac(27, 2)}) {
    const std::set<long> expected = oracle_lengths(v, 2, 2, 3, true);
    const FieldElement d = FieldElement::t(QQ, v) * (FieldElement::constant(QQ, 1) + FieldElement::t(QQ, frac(1, 2)));
    const LengthBounds b = extend_length_bounds(d, ctx, 4, 3);
    long N = 1;
    while (compare(GroupElement(4 * N), v) <= 0) ++N;
    o.check(b.d_lengths == expected, "L_D at v = " + v.to_string());
    o.check(b.N == N && N == 4, "N at v = " + v.to_string());
    o.check(b.upper == *expected.rbegin(), "upper bound at v = " + v.to_string());
  }
}

// 7: the factorization reproduces phi at points of K.
void oracle_dvr(Oracle& o, Rng& rng) {
  auto k = [](long c) { return FieldElement::constant(QQ, c); };
  const FieldElement u = FieldElement::t(QQ, 1);
  int done = 0;
  while (done < 20) {
    const long n = std::vector<long>{1, 2, 3, 5}[done % 4];
    std::vector<FieldElement> pts;
    for (long i = 0; i < n; ++i) pts.push_back(k(i) + u * k(pick(rng, -2, 2)));
    const DvrContext ctx = make_dvr_context(QQ, pts);
    std::vector<long> e;
    RationalFunction phi(XPoly({k(pick(rng, 1, 3)) + u}), XPoly({k(1)}));
    for (long i = 0; i < n; ++i) {
      e.push_back(pick(rng, 0, 2));
      if (e.back()) phi = phi * psi(ctx, i).pow(e.back());
    }
    DvrFactorization f;
    try {
      f = factor_into_atoms(phi, ctx);
    } catch (const PreconditionError&) {
      continue;
    }
    ++done;
    o.check(f.exponents == e, "exponents for |E| = " + std::to_string(n));
    const RationalFunction back = f.product(ctx);
    for (long x = 7; x <= 9; ++x) {
      const FieldElement a = k(x) + u * k(x);
      o.check(back.evaluate(a) == phi.evaluate(a), "product at x = " + std::to_string(x));
    }
  }
}

// 8: direct evaluation shows psi and phi/psi are nonunits with values >= 0.
void oracle_antimatter(Oracle& o, Rng& rng) {
  struct Case {
    IntRElement phi;
    int branch;
    GadgetContext ctx;
  };
  std::vector<Case> cases;
  const GadgetContext q = context(MonoidSpec::one_gap(), QQ);
  const GadgetContext r = context(MonoidSpec::one_gap(Lattice::quadratic_integers(2)), QQ);
  const GadgetContext z = context(MonoidSpec::one_gap(Lattice::integers()), QQ);
  for (long i = 1; i <= 10; ++i) {
    cases.push_back({gadget_zigzag({frac(i % 3), frac(i % 3) + frac(i, 2), 1, ZigZagCase::UnitPolynomial}, q), 1, q});
    cases.push_back({make_constant(FieldElement::t(QQ, GroupElement(i, 1, 2)), r), 2, r});
    cases.push_back({gadget_stone_weierstrass(FieldElement::t(QQ, i % 4), i % 3 ? i : i + 1, Lattice::integers()), 3, z});
  }
  for (const Case& c : cases) {
    const AntimatterWitness w = antimatter_witness(c.phi, c.branch, c.ctx);
    for (const IntRElement* part : {&w.psi, &w.quotient}) {
      bool positive = false, nonnegative = true;
      for (long k = -12; k <= 24; ++k) {
        const GroupElement g = c.ctx.lattice().dense() ? frac(k, 2) : frac(k);
        if (!in_group(g, c.ctx.lattice())) continue;
        FieldElement value;
        try {
          value = part->func.evaluate(unit_times_t(rng, QQ, g));
        } catch (const PreconditionError&) {
          nonnegative = false;
          continue;
        }
        if (value.is_zero()) {
          positive = true;
          continue;
        }
        const int sign = valuation(value).sign();
        positive = positive || sign > 0;
        nonnegative = nonnegative && sign >= 0;
      }
      // value at a = 0
      const FieldElement at0 = part->func.evaluate(FieldElement::constant(QQ, 0));
      positive = positive || at0.is_zero() || valuation(at0).sign() > 0;
      o.check(nonnegative && positive, "branch " + std::to_string(c.branch) + ": " + part->func.to_string());
    }
    o.check(w.psi.func * w.quotient.func == c.phi.func, "psi * quotient != phi");
  }
}

bool in_monoid_by_hand(const GroupElement& e, bool one_gap) {
  if (e.is_zero()) return true;
  if (one_gap) return compare(e, frac(1)) >= 0;
  return (compare(e, frac(2)) >= 0 && compare(e, frac(3)) <= 0) || compare(e, frac(4)) >= 0;
}

// 9
void oracle_normalize(Oracle& o, Rng& rng) {
  for (bool one_gap : {true, false}) {
    const MonoidSpec spec = one_gap ? MonoidSpec::one_gap() : MonoidSpec::two_three_four();
    const long delta = one_gap ? 1 : 4;
    for (int s = 0; s < 20; ++s) {
      const FieldElement den = FieldElement::constant(QQ, 1) + FieldElement::t(QQ, frac(1, pick(rng, 2, 5)));
      const FieldElement c = FieldElement::t(QQ, frac(delta * 6 + pick(rng, 1, 12), 6)) / den;
      const DCertificate cert = normalize_to_D(c, spec);
      bool exps = true;
      for (const Poly* p : {&cert.num, &cert.den}) {
        for (const auto& [e, coeff] : p->terms()) exps = exps && in_monoid_by_hand(e, one_gap);
      }
      o.check(cert.in_D && exps, "certificate for " + c.to_string());
      const FieldElement a = FieldElement(cert.num, cert.den);
      o.check((a - c).is_zero(), "re-evaluation of " + c.to_string());
    }
    const FieldElement t = FieldElement::t(QQ, delta);
    const FieldElement ex = (t.pow(13) + t.pow(7) + t.pow(3)) / (FieldElement::t(QQ, frac(delta, 2)) + FieldElement::constant(QQ, 1));
    o.check(valuation(ex) == GroupElement(3 * delta), "example value");
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void(Oracle&, Rng&)>> oracles = {
      oracle_lengths_one_gap, oracle_catenary, oracle_envelope,  oracle_gadgets,  oracle_intr_lengths,
      oracle_sandwich,        oracle_dvr,      oracle_antimatter, oracle_normalize,
  };
  bool all = true;
  for (const CriterionInfo& info : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult suite = run_criterion(info.id, kSeed);
    Oracle oracle;
    Rng rng(kSeed + 7919ULL * static_cast<std::uint64_t>(info.id));
    try {
      oracles[info.id - 1](oracle, rng);
    } catch (const std::exception& e) {
      oracle.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = suite.checks_passed && oracle.ok() && seconds < info.limit_seconds;
    all = all && pass;
    std::printf("%s criterion %d (%s): suite %ld cases, oracle %ld cases, exact, %.2f s of %.0f s\n",
                pass ? "PASS" : "FAIL", info.id, info.name.c_str(), suite.cases, oracle.cases, seconds,
                info.limit_seconds);
    for (const auto& c : suite.counterexamples) std::printf("    suite: %s\n", c.c_str());
    for (const auto& c : oracle.failures) std::printf("    oracle: %s\n", c.c_str());
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
