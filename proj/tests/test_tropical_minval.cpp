#include <random>

#include "doctest.h"
#include "intr/rational_function.hpp"

using namespace intr;

namespace {

const CoefficientField QQ = CoefficientField::rationals();

GroupElement q(long n, long d = 1) { return GroupElement(Rational(n) / Rational(d)); }
FieldElement t(const GroupElement& e) { return FieldElement::t(QQ, e); }
FieldElement c(long n) { return FieldElement::constant(QQ, n); }
XPoly X() { return XPoly::x(QQ); }
XPoly K(const FieldElement& a) { return XPoly::constant(a); }

GroupElement min_of_lines(const std::vector<std::pair<long, GroupElement>>& lines, const GroupElement& x) {
  GroupElement best = lines.front().second + x * Rational(lines.front().first);
  for (const auto& [n, v] : lines) best = min(best, v + x * Rational(n));
  return best;
}

}  // namespace

TEST_CASE("envelope examples") {
  PiecewiseLinear e = (X().pow(2) + K(t(1))).minval();
  REQUIRE(e.breakpoints().size() == 1);
  CHECK(e.breakpoints()[0] == q(1, 2));
  CHECK(e.pieces()[0] == LinePiece{2, 0});
  CHECK(e.pieces()[1] == LinePiece{0, 1});

  PiecewiseLinear single = envelope({{3, q(5)}});
  CHECK(single.breakpoints().empty());
  CHECK(single.evaluate(q(1)) == q(8));

  // x^3 + b^3 t with v(b) = beta: breakpoint beta + 1/3
  for (long beta : {0L, 1L, 2L}) {
    FieldElement b3 = t(q(3 * beta));
    PiecewiseLinear f = (X().pow(3) + K(b3 * t(1))).minval();
    REQUIRE(f.breakpoints().size() == 1);
    CHECK(f.breakpoints()[0] == q(beta) + q(1, 3));
  }
  CHECK_THROWS_AS(envelope({}), PreconditionError);
}

TEST_CASE("minval of the Stone-Weierstrass quotient") {
  RationalFunction psi(X().pow(3) + K(t(2)), X().pow(3) + K(t(1)));
  PiecewiseLinear m = minval_of(psi);
  CHECK(m.continuous());
  REQUIRE(m.breakpoints() == std::vector<GroupElement>{q(1, 3), q(2, 3)});
  CHECK(m.evaluate(q(0)) == q(0));
  CHECK(m.evaluate(q(1, 2)) == q(1, 2));
  CHECK(m.evaluate(q(1)) == q(1));
  CHECK(m.pieces()[1].slope == 3);
  Extremum inf = infimum_over(m, Lattice::rationals());
  Extremum sup = supremum_over(m, Lattice::rationals());
  CHECK(*inf.value == q(0));
  CHECK(inf.attained);
  CHECK(*sup.value == q(1));
  CHECK(minval_of(RationalFunction(t(q(5, 2)))) == PiecewiseLinear::constant(q(5, 2)));
  CHECK(minval_of(psi / psi).is_zero());
}

TEST_CASE("extrema") {
  CHECK(*infimum_over(PiecewiseLinear::constant(q(5, 2)), Lattice::rationals()).value == q(5, 2));
  CHECK_FALSE(infimum_over(PiecewiseLinear::line(1, 0), Lattice::rationals()).value);
  // min over Z of 1/3-peaked tent: breakpoint 1/3 is not an integer
  PiecewiseLinear tent({q(1, 3)}, {{-1, q(1, 3)}, {1, q(-1, 3)}});
  Extremum dense = infimum_over(tent, Lattice::rationals());
  CHECK(*dense.value == q(0));
  CHECK(dense.attained);
  Extremum onz = infimum_over(tent, Lattice::integers());
  CHECK(*onz.value == q(1, 3));
  CHECK(*onz.at == q(0));
  Extremum r2 = infimum_over(tent, Lattice::quadratic_integers(2));
  CHECK(*r2.value == q(0));
  CHECK_FALSE(r2.attained);
}

TEST_CASE("dichotomy") {
  CHECK(dichotomy(PiecewiseLinear::constant(0)).kind == DichotomyKind::IdenticallyZero);
  CHECK(dichotomy(PiecewiseLinear::constant(1)).kind == DichotomyKind::StrictlyPositive);
  Dichotomy d = dichotomy((X() + K(t(1))).minval());
  CHECK(d.kind == DichotomyKind::Mixed);
  REQUIRE(d.witness);
  CHECK(*d.witness == q(-1));
  PiecewiseLinear sw = minval_of(RationalFunction(X().pow(3) + K(t(2)), X().pow(3) + K(t(1))));
  Dichotomy e = dichotomy(sw);
  CHECK(e.kind == DichotomyKind::Mixed);
  CHECK(sw.evaluate(*e.witness) == q(0));
}

TEST_CASE("exceptional abscissas") {
  CHECK(exceptional_abscissas(RationalFunction(X().pow(2) + K(t(1)), K(c(1)))) == std::vector<GroupElement>{q(1, 2)});
  CHECK(exceptional_abscissas(RationalFunction(c(7))).empty());
  XPoly f = (X() - K(c(1))) * (X() - K(t(1)));
  CHECK(exceptional_abscissas(RationalFunction(f, K(c(1)))) == std::vector<GroupElement>{q(0), q(1)});
}

TEST_CASE("envelope equals the pointwise minimum on random families") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> deg(0, 8), num(-40, 40), cnt(1, 9);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::pair<long, GroupElement>> lines;
    int n = static_cast<int>(cnt(rng));
    for (int k = 0; k < n; ++k) lines.emplace_back(deg(rng), q(num(rng), 4));
    PiecewiseLinear e = envelope(lines);
    CHECK(e.continuous());
    CHECK(e.concave());
    for (int j = 0; j < 50; ++j) {
      GroupElement x = q(num(rng), 6);
      CHECK(e.evaluate(x) == min_of_lines(lines, x));
    }
  }
}

TEST_CASE("differences stay continuous and add pointwise") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> deg(0, 6), num(-20, 20), cnt(1, 6);
  auto random_env = [&] {
    std::vector<std::pair<long, GroupElement>> lines;
    long n = cnt(rng);
    for (long k = 0; k < n; ++k) lines.emplace_back(deg(rng), q(num(rng), 3));
    return envelope(lines);
  };
  for (int i = 0; i < 200; ++i) {
    PiecewiseLinear f = random_env(), g = random_env();
    PiecewiseLinear d = f - g, s = f + g;
    CHECK(d.continuous());
    CHECK(s.continuous());
    for (int j = 0; j < 20; ++j) {
      GroupElement x = q(num(rng), 5);
      CHECK(d.evaluate(x) == f.evaluate(x) - g.evaluate(x));
      CHECK(s.evaluate(x) == f.evaluate(x) + g.evaluate(x));
    }
  }
}

TEST_CASE("generic values follow the minval function") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> exp(0, 8), coeff(1, 5), cnt(1, 3), gamma(-8, 8);
  auto random_coeff = [&] {
    Poly p(QQ);
    while (p.is_zero()) {
      long n = cnt(rng);
      for (long k = 0; k < n; ++k) p.add_term(q(exp(rng), 2), coeff(rng));
    }
    return FieldElement(p);
  };
  auto random_xpoly = [&](long maxdeg) {
    std::vector<FieldElement> cs;
    for (long k = 0; k <= maxdeg; ++k) cs.push_back(random_coeff());
    return XPoly(cs);
  };
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    RationalFunction f(random_xpoly(3), random_xpoly(2));
    RationalFunction g(random_xpoly(2), random_xpoly(1));
    std::vector<GroupElement> ex = exceptional_abscissas(f);
    PiecewiseLinear m = minval_of(f);
    for (int j = 0; j < 5; ++j) {
      GroupElement v = q(gamma(rng), 3);
      if (std::find(ex.begin(), ex.end(), v) != ex.end()) continue;
      FieldElement a = t(v) * (c(1) + t(q(1, 7))) * c(coeff(rng));
      CHECK(valuation(f.evaluate(a)) == m.evaluate(v));
      ++checked;
    }
    PiecewiseLinear prod = minval_of(f * g);
    PiecewiseLinear sum = minval_of(f) + minval_of(g);
    for (long k = -6; k <= 6; ++k) CHECK(prod.evaluate(q(k, 2)) == sum.evaluate(q(k, 2)));
  }
  CHECK(checked > 200);
}
