#include <random>

#include "doctest.h"
#include "intr/gadgets_intr.hpp"

using namespace intr;

namespace {

const CoefficientField QQ = CoefficientField::rationals();
const CoefficientField F2 = CoefficientField::prime(2);

GroupElement q(long n, long d = 1) { return GroupElement(Rational(n) / Rational(d)); }
GroupElement r2(long a, long b) { return GroupElement(a, b, 2); }

GadgetContext context(const MonoidSpec& spec, CoefficientField field) {
  GadgetContext ctx;
  ctx.spec = spec;
  ctx.field = field;
  return ctx;
}

// Lattice points of Gamma in a window around 0.
std::vector<GroupElement> grid(const Lattice& lattice) {
  std::vector<GroupElement> out;
  switch (lattice.kind()) {
    case Lattice::Kind::Integers:
      for (long n = -6; n <= 8; ++n) out.push_back(q(n));
      break;
    case Lattice::Kind::QuadraticIntegers:
      for (long a = -4; a <= 5; ++a)
        for (long b = -3; b <= 3; ++b) out.push_back(GroupElement(a, b, lattice.radicand()));
      break;
    default:
      for (long n = -12; n <= 24; ++n) out.push_back(q(n, 6));
      for (long n = -4; n <= 8; ++n) out.push_back(q(n, 5));
      break;
  }
  return out;
}

// u * t^gamma with u a random unit of V.
FieldElement random_point(std::mt19937_64& rng, CoefficientField field, const GroupElement& gamma) {
  std::uniform_int_distribution<long> coef(1, 5), ex(1, 3);
  const long lead = field.finite() ? 1 + static_cast<long>(rng() % (field.p - 1)) : coef(rng) * (rng() % 2 ? 1 : -1);
  FieldElement u = FieldElement::constant(field, lead);
  for (int k = 0; k < 2; ++k) {
    u = u + FieldElement::constant(field, coef(rng)) * FieldElement::t(field, q(ex(rng), 2));
  }
  return u * FieldElement::t(field, gamma);
}

// Direct evaluation never leaves the profile range.
int check_profile_soundness(const IntRElement& e, CoefficientField field, std::mt19937_64& rng, int per_point = 4) {
  int checked = 0;
  for (const GroupElement& g : grid(e.profile.lattice)) {
    for (int k = 0; k < per_point; ++k) {
      const FieldElement a = random_point(rng, field, g);
      FieldElement value;
      try {
        value = e.func.evaluate(a);
      } catch (const PreconditionError&) {
        CHECK_FALSE(e.profile.at(g).lo.has_value());
        continue;
      }
      if (value.is_zero()) {
        CHECK_FALSE(e.profile.at(g).hi.has_value());
        continue;
      }
      INFO("gamma = ", g.to_string(), ", a = ", a.to_string());
      CHECK(e.profile.at(g).contains(valuation(value)));
      ++checked;
    }
  }
  return checked;
}

}  // namespace

TEST_CASE("Stone-Weierstrass quotient over Z") {
  const Lattice Z = Lattice::integers();
  IntRElement sw = gadget_stone_weierstrass(FieldElement::t(QQ, 2), 1, Z);
  CHECK(sw.profile.exact());
  for (long g = -3; g <= 2; ++g) CHECK(*sw.profile.at(g).lo == q(0));
  for (long g = 3; g <= 8; ++g) CHECK(*sw.profile.at(g).lo == q(1));
  CHECK(*sw.profile.at_zero() == q(1));
  CHECK(valuation(sw.func.evaluate(FieldElement::constant(QQ, 0))) == q(1));
  CHECK(certify_in_intr_V(sw));
  CHECK_FALSE(is_unit_intr_V(sw));
  CHECK(*sw.profile.supremum().value == q(1));
  std::mt19937_64 rng(1);
  CHECK(check_profile_soundness(sw, QQ, rng) > 40);
  CHECK_THROWS_AS(gadget_stone_weierstrass(FieldElement::t(QQ, 0), 0, Z), PreconditionError);
}

TEST_CASE("Stone-Weierstrass quotient over a dense group has a pole") {
  IntRElement sw = gadget_stone_weierstrass(FieldElement::t(QQ, 2), 1, Lattice::rationals());
  CHECK_FALSE(sw.profile.exact());
  CHECK_FALSE(sw.profile.at(q(7, 3)).lo.has_value());
  CHECK(*sw.profile.at(q(7, 3)).hi == q(0));
  CHECK(*sw.profile.at(q(8, 3)).lo == q(1));
  CHECK_FALSE(sw.profile.at(q(8, 3)).hi.has_value());
  CHECK_FALSE(certify_in_intr_V(sw));
  // a^3 = -t^7 kills the denominator.
  CHECK_THROWS_AS(sw.func.evaluate(-FieldElement::t(QQ, q(7, 3))), PreconditionError);
  std::mt19937_64 rng(2);
  CHECK(check_profile_soundness(sw, QQ, rng, 2) > 40);
}

TEST_CASE("zig-zag with a unit-valued polynomial") {
  GadgetContext ctx = context(MonoidSpec::one_gap(), F2);
  CHECK(default_unit_valued_poly(F2).degree() == 2);
  CHECK(default_unit_valued_poly(CoefficientField::prime(3)).degree() == 3);
  CHECK(default_unit_valued_poly(QQ).degree() == 2);
  CHECK(has_root_in_residue_field(XPoly::x(F2).pow(2) + XPoly::constant(FieldElement::constant(F2, 1)), F2));

  IntRElement z = gadget_zigzag({0, 1, 1, ZigZagCase::Auto}, ctx);
  CHECK(z.profile.exact());
  CHECK(z.profile.generic == minval_of(z.func));
  CHECK(z.profile.generic.breakpoints() == std::vector<GroupElement>{q(0), q(1, 2)});
  CHECK(*z.profile.at(q(-1)).lo == q(0));
  CHECK(*z.profile.at(q(1, 4)).lo == q(1, 2));
  CHECK(*z.profile.at(q(3)).lo == q(1));
  CHECK(certify_in_intr_V(z));
  std::mt19937_64 rng(3);
  CHECK(check_profile_soundness(z, F2, rng) > 150);

  GadgetContext qctx = context(MonoidSpec::one_gap(), QQ);
  IntRElement zq = gadget_zigzag({1, q(5, 2), 1, ZigZagCase::Auto}, qctx);
  CHECK(*zq.alpha == q(1));
  CHECK(*zq.profile.at_zero() == q(5, 2));
  CHECK(check_profile_soundness(zq, QQ, rng) > 150);

  CHECK_THROWS_AS(gadget_zigzag({1, 1, 1, ZigZagCase::Auto}, qctx), PreconditionError);
  CHECK_THROWS_AS(gadget_zigzag({2, 1, 1, ZigZagCase::Auto}, qctx), PreconditionError);
  CHECK_THROWS_AS(gadget_zigzag({0, 1, 1, ZigZagCase::PthPower}, qctx), PreconditionError);
}

TEST_CASE("zig-zag with a square over Z[sqrt2]") {
  const Lattice L = Lattice::quadratic_integers(2);
  GadgetContext ctx = context(MonoidSpec::one_gap(L), QQ);
  const GroupElement eps = q(2) - GroupElement::sqrt(2);
  CHECK(zigzag_plateau(0, 1, eps, L) == r2(-2, 2));
  IntRElement z = gadget_zigzag({0, 1, eps, ZigZagCase::Auto}, ctx);
  const GroupElement a2 = r2(-2, 2);
  CHECK_FALSE(in_group((q(1) + a2) / Rational(2), L));
  CHECK(z.profile.exact());
  CHECK(*z.profile.at(r2(-3, 0)).lo == q(0));
  CHECK(*z.profile.at(r2(3, 0)).lo == a2);
  CHECK(*z.profile.at_zero() == a2);
  CHECK(compare(a2, q(1) - eps) > 0);
  CHECK(compare(a2, q(1)) <= 0);
  std::mt19937_64 rng(4);
  CHECK(check_profile_soundness(z, QQ, rng, 3) > 150);

  // alpha'' stays inside (alpha' - eps, alpha'] for shrinking eps.
  for (long k = 1; k <= 6; ++k) {
    const GroupElement e = small_positive_element(L, q(1, k * 3));
    const GroupElement a = zigzag_plateau(1, q(3), e, L);
    CHECK(compare(a, q(3) - e) > 0);
    CHECK(compare(a, q(3)) <= 0);
    CHECK(in_group(a, L));
  }

  GadgetContext zctx = context(MonoidSpec::one_gap(Lattice::integers()), QQ);
  CHECK_THROWS_AS(gadget_zigzag({0, 1, 1, ZigZagCase::Auto}, zctx), PreconditionError);
}

TEST_CASE("composition with x/r shifts the profile") {
  GadgetContext ctx = context(MonoidSpec::one_gap(), QQ);
  IntRElement z = gadget_zigzag({1, 2, 1, ZigZagCase::Auto}, ctx);
  IntRElement s = compose_scale(z, q(3), ctx);
  CHECK(s.profile.generic == z.profile.generic.shifted(q(3)));
  CHECK(s.profile.generic == minval_of(s.func));
  std::mt19937_64 rng(6);
  CHECK(check_profile_soundness(s, QQ, rng, 2) > 60);

  IntRElement prod = multiply(z, s, ctx);
  CHECK(prod.profile.generic == minval_of(prod.func));
  CHECK(check_profile_soundness(prod, QQ, rng, 2) > 60);
}

TEST_CASE("membership in IntR(K,D)") {
  GadgetContext one = context(MonoidSpec::one_gap(), QQ);
  CHECK(gadget_zigzag({1, 2, 1, ZigZagCase::Auto}, one).membership == Membership::Certified);
  IntRElement z = gadget_zigzag({1, 2, 1, ZigZagCase::Auto}, one);
  certify_in_intr_D(z, one);
  CHECK(z.membership == Membership::Certified);
  IntRElement low = gadget_zigzag({0, 2, 1, ZigZagCase::Auto}, one);
  certify_in_intr_D(low, one);
  CHECK(low.membership == Membership::NotCertified);

  GadgetContext g4 = context(MonoidSpec::two_three_four(), QQ);
  IntRElement flat = gadget_zigzag({2, 5, 1, ZigZagCase::Auto}, g4);
  certify_in_intr_D(flat, g4);
  CHECK(flat.membership == Membership::NotCertified);
  CHECK(flat.note.find("flat-zone") == 0);

  CHECK(make_constant(FieldElement::t(QQ, q(5, 2)), g4).membership == Membership::Certified);
  CHECK(make_constant(FieldElement::t(QQ, q(7, 2)), g4).membership == Membership::NotCertified);
}

TEST_CASE("atom rule") {
  GadgetContext one = context(MonoidSpec::one_gap(), QQ);
  std::string why;
  CHECK(atom_rule(make_constant(FieldElement::t(QQ, q(3, 2)), one), one, &why) == Verdict::Yes);
  CHECK(atom_rule(make_constant(FieldElement::t(QQ, q(3)), one), one) == Verdict::No);
  CHECK(atom_rule(make_constant(FieldElement::constant(QQ, 3), one), one, &why) == Verdict::No);
  CHECK(why == "unit");

  IntRElement z = gadget_zigzag({1, q(5, 2), 1, ZigZagCase::Auto}, one);
  CHECK(atom_rule(z, one, &why) == Verdict::Yes);
  IntRElement big = gadget_zigzag({2, 3, 1, ZigZagCase::Auto}, one);
  CHECK(atom_rule(big, one) == Verdict::No);

  GadgetContext g4 = context(MonoidSpec::two_three_four(), QQ);
  IntRElement z4 = gadget_zigzag({4, 5, 1, ZigZagCase::Auto}, g4);
  certify_in_intr_D(z4, g4);
  REQUIRE(z4.membership == Membership::Certified);
  CHECK(atom_rule(z4, g4, &why) == Verdict::Yes);
  CHECK(why.find("flat zone") != std::string::npos);

  IntRElement sw = gadget_stone_weierstrass(FieldElement::t(QQ, 2), 1, Lattice::rationals());
  CHECK(atom_rule(sw, one) == Verdict::Unknown);
}

TEST_CASE("strict divisor witnesses") {
  GadgetContext one = context(MonoidSpec::one_gap(), QQ);
  IntRElement phi = gadget_zigzag({1, 2, 1, ZigZagCase::Auto}, one);
  AntimatterWitness w1 = antimatter_witness(phi, 1, one);
  CHECK(w1.ok());
  CHECK(w1.delta == q(1));
  CHECK(w1.quotient.func * w1.psi.func == phi.func);
  CHECK_THROWS_AS(antimatter_witness(phi, 2, one), PreconditionError);
  CHECK_THROWS_AS(antimatter_witness(phi, 3, one), PreconditionError);

  const Lattice L = Lattice::quadratic_integers(2);
  GadgetContext r2ctx = context(MonoidSpec::one_gap(L), QQ);
  IntRElement phi2 = gadget_zigzag({1, 3, q(1, 2), ZigZagCase::Auto}, r2ctx);
  AntimatterWitness w2 = antimatter_witness(phi2, 2, r2ctx);
  CHECK(w2.ok());
  std::mt19937_64 rng(7);
  CHECK(check_profile_soundness(w2.quotient, QQ, rng, 2) > 60);

  GadgetContext zctx = context(MonoidSpec::one_gap(Lattice::integers()), QQ);
  IntRElement phi3 = gadget_stone_weierstrass(FieldElement::t(QQ, 2), 1, Lattice::integers());
  AntimatterWitness w3 = antimatter_witness(phi3, 3, zctx);
  CHECK(w3.ok());
  CHECK(w3.delta == q(3));
  CHECK(check_profile_soundness(w3.quotient, QQ, rng, 2) == 30);
  AntimatterWitness w3c = antimatter_witness(make_constant(FieldElement::t(QQ, 1), zctx), 3, zctx);
  CHECK(w3c.ok());

  CHECK_THROWS_AS(antimatter_witness(make_constant(FieldElement::constant(QQ, 2), one), 1, one), PreconditionError);
}

TEST_CASE("atomicity hypotheses") {
  HypothesisReport a = check_atomic_hypotheses(MonoidSpec::one_gap(), F2);
  CHECK(a.local_and_atomic);
  CHECK(*a.terminal == q(1));
  HypothesisReport b = check_atomic_hypotheses(MonoidSpec::two_three_four(), QQ);
  CHECK(b.local_and_atomic);
  CHECK(*b.terminal == q(4));
  HypothesisReport c = check_atomic_hypotheses(MonoidSpec::one_gap(Lattice::integers()), QQ);
  CHECK_FALSE(c.local_and_atomic);
  bool found = false;
  for (const auto& chk : c.checks) {
    if (chk.name == "no minimal positive") found = !chk.passed;
  }
  CHECK(found);
}
