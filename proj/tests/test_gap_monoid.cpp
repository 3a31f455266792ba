#include <random>
#include <set>

#include "doctest.h"
#include "intr/gap_monoid.hpp"

using namespace intr;

namespace {

GroupElement q(long n, long d = 1) { return GroupElement(Rational(n) / Rational(d)); }

// Atom test on the grid (1/den)Z: x is an atom when no grid split x = y + z
// with y, z in M_{>0} exists.
bool grid_atom(const MonoidSpec& m, const GroupElement& x, long den) {
  if (x.sign() <= 0 || !m.contains(x)) return false;
  Rational xr = x.rational_part();
  for (long k = 1; Rational(k, den) < xr; ++k) {
    GroupElement y(Rational(k) / Rational(den));
    if (m.contains(y) && m.contains(x - y)) return false;
  }
  return true;
}

// Partitions of a grid target into parts taken from an explicit list.
void partition_lengths(long target, const std::vector<long>& parts, std::size_t from, long count,
                       std::set<long>& out) {
  if (target == 0) {
    out.insert(count);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] <= target) partition_lengths(target - parts[i], parts, i, count + 1, out);
  }
}

}  // namespace

TEST_CASE("closure check examples") {
  CHECK(check_monoid(MonoidSpec::one_gap()).closed_under_addition);
  CHECK(check_monoid(MonoidSpec::two_three_four()).closed_under_addition);
  MonoidSpec bad{Lattice::rationals(), {Interval::closed(1, q(3, 2)), Interval::at_least(4)}};
  ClosureReport r = check_monoid(bad);
  CHECK_FALSE(r.closed_under_addition);
  REQUIRE(r.witness);
  CHECK(r.witness->first == q(3, 2));
  CHECK(r.witness->second == q(3, 2));
  CHECK_THROWS_AS(make_monoid(Lattice::rationals(), bad.intervals), PreconditionError);
}

TEST_CASE("the quadratic example monoid is closed") {
  Lattice z2 = Lattice::quadratic_integers(2);
  GroupElement r2 = GroupElement::sqrt(2);
  MonoidSpec m{z2, {Interval::point(1), Interval::point(r2), Interval::at_least(r2 * Rational(2) - q(1))}};
  CHECK(check_monoid(m).closed_under_addition);
  CHECK(m.contains(q(2)));
  CHECK_FALSE(m.contains(q(3, 2)));
}

TEST_CASE("bounded away from zero") {
  auto a = is_bounded_away_from_zero(MonoidSpec::one_gap());
  REQUIRE(a);
  CHECK(a->bound == q(1));
  CHECK(a->attained);
  auto b = is_bounded_away_from_zero(MonoidSpec::two_three_four());
  REQUIRE(b);
  CHECK(b->bound == q(2));
  MonoidSpec open{Lattice::rationals(), {Interval::greater_than(0)}};
  CHECK_FALSE(is_bounded_away_from_zero(open));
}

TEST_CASE("integral terminality") {
  CHECK(is_integrally_terminal_for(MonoidSpec::one_gap(), q(1)).terminal);
  CHECK(is_integrally_terminal_for(MonoidSpec::two_three_four(), q(4)).terminal);
  TerminalReport r3 = is_integrally_terminal_for(MonoidSpec::two_three_four(), q(3));
  CHECK_FALSE(r3.terminal);
  CHECK(r3.witness == q(7, 2));
  TerminalReport rh = is_integrally_terminal_for(MonoidSpec::one_gap(), q(1, 2));
  CHECK_FALSE(rh.terminal);
  CHECK(rh.witness == q(3, 4));
  CHECK(find_integrally_terminal(MonoidSpec::one_gap()) == q(1));
  CHECK(find_integrally_terminal(MonoidSpec::two_three_four()) == q(4));
}

TEST_CASE("minimal positive elements") {
  CHECK(has_no_minimal_positive(Lattice::rationals()));
  CHECK_FALSE(has_no_minimal_positive(Lattice::integers()));
  CHECK(has_no_minimal_positive(Lattice::quadratic_integers(2)));
}

TEST_CASE("monoid atoms") {
  CHECK(monoid_atoms(MonoidSpec::one_gap()) == IntervalSet({Interval{q(1), true, q(2), false}}));
  CHECK(monoid_atoms(MonoidSpec::two_three_four()) == IntervalSet({Interval::closed(2, 3)}));
  MonoidSpec five{Lattice::rationals(), {Interval::at_least(5)}};
  CHECK(monoid_atoms(five) == IntervalSet({Interval{q(5), true, q(10), false}}));
}

TEST_CASE("monoid atoms agree with a grid oracle") {
  for (const MonoidSpec& m : {MonoidSpec::one_gap(), MonoidSpec::two_three_four(),
                              MonoidSpec{Lattice::rationals(), {Interval::at_least(5)}}}) {
    IntervalSet atoms = monoid_atoms(m);
    for (long k = 1; k <= 48; ++k) {
      GroupElement x(Rational(k, 4));
      CHECK_MESSAGE(atoms.contains(x) == grid_atom(m, x, 4), m.to_string() << " at " << x.to_string());
    }
    // (A + M_{>0}) n A is empty and A u (M_{>0} + M_{>0}) covers M_{>0}.
    IntervalSet pos = m.positive_part();
    CHECK(atoms.sum(pos).intersect(atoms).empty());
    CHECK(pos.difference(atoms.unite(pos.sum(pos))).empty());
  }
}

TEST_CASE("flat zone") {
  CHECK(flat_zone_bound(MonoidSpec::one_gap()) == q(1));
  CHECK(flat_zone_bound(MonoidSpec::two_three_four()) == q(4));
}

TEST_CASE("closed form lengths") {
  MonoidSpec m = MonoidSpec::one_gap();
  CHECK(length_set_closed_form(m, q(3)).values() == std::set<long>{2, 3});
  CHECK(length_set_closed_form(m, q(4)).values() == std::set<long>{3, 4});
  CHECK(length_set_closed_form(m, q(3, 2)).values() == std::set<long>{1});
  CHECK_THROWS_AS(length_set_closed_form(m, q(1, 2)), PreconditionError);
  CHECK_THROWS_AS(length_set_closed_form(MonoidSpec::two_three_four(), q(5)), PreconditionError);
}

TEST_CASE("brute force lengths") {
  MonoidSpec m = MonoidSpec::one_gap();
  BruteForceLengths a = length_set_bruteforce(m, q(7, 2), 2);
  CHECK(a.lengths.values() == std::set<long>{2, 3});
  BruteForceLengths b = length_set_bruteforce(MonoidSpec::two_three_four(), q(13), 1);
  CHECK(b.lengths.values() == std::set<long>{5, 6});
  BruteForceLengths c = length_set_bruteforce(MonoidSpec::two_three_four(), q(5, 2), 2);
  CHECK(c.lengths.values() == std::set<long>{1});
  CHECK_THROWS_AS(length_set_bruteforce(m, q(7, 3), 2), PreconditionError);
  BruteForceLengths capped = length_set_bruteforce(m, q(12), 6, 100);
  CHECK(capped.cap_exceeded);
  for (const auto& [len, parts] : b.witness) {
    GroupElement total(0);
    for (const GroupElement& p : parts) {
      total += p;
      CHECK(monoid_atoms(MonoidSpec::two_three_four()).contains(p));
    }
    CHECK(total == q(13));
    CHECK(static_cast<long>(parts.size()) == len);
  }
}

TEST_CASE("integer partitions agree with the brute force on the two-three-four monoid") {
  MonoidSpec m = MonoidSpec::two_three_four();
  for (long v = 2; v <= 20; ++v) {
    std::set<long> expected;
    partition_lengths(v, {2, 3}, 0, 0, expected);
    CHECK(length_set_bruteforce(m, q(v), 1).lengths.values() == expected);
  }
}

TEST_CASE("closed form equals brute force on grids") {
  MonoidSpec m = MonoidSpec::one_gap();
  for (long den : {1, 2, 3, 4, 6}) {
    for (long k = den; k <= 12 * den; ++k) {
      GroupElement v(Rational(k) / Rational(den));
      LengthSet closed = length_set_closed_form(m, v);
      BruteForceLengths brute = length_set_bruteforce(m, v, den);
      CHECK_FALSE(brute.cap_exceeded);
      CHECK_MESSAGE(closed == brute.lengths, "v = " << v.to_string());
    }
  }
}

TEST_CASE("limit identity for the lower endpoint") {
  for (long den : {1, 2, 3, 4, 6}) {
    for (long k = den; k <= 12 * den; ++k) {
      Rational v = Rational(k) / Rational(den);
      for (long n : {1000L, 99991L, 1000000L}) {
        Rational r = 2 - Rational(1) / Rational(n);
        GroupElement ratio(Rational(v / r));
        CHECK(ratio.ceil() == limit_lower_endpoint(GroupElement(v)));
      }
    }
  }
}

TEST_CASE("catenary closed form") {
  MonoidSpec m = MonoidSpec::one_gap();
  CHECK(catenary_closed_form(m, q(3, 2)) == 0);
  CHECK(catenary_closed_form(m, q(5, 2)) == 2);
  CHECK(catenary_closed_form(m, q(10)) == 3);
  CHECK_THROWS_AS(catenary_closed_form(m, q(1, 3)), PreconditionError);
}

TEST_CASE("perturbed two-interval unions are rejected with valid witnesses") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> quarter(4, 16);
  std::uniform_int_distribution<long> bump(1, 12);
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    // {0} u [a,b] u [c,inf) with b < c is closed exactly when c <= 2a.
    long a = quarter(rng);
    long b = a + bump(rng);
    long c = std::max(2 * a, b + 1) + bump(rng);
    if (c <= b) continue;
    MonoidSpec m{Lattice::rationals(),
                 {Interval::closed(q(a, 4), q(b, 4)), Interval::at_least(q(c, 4))}};
    ClosureReport r = check_monoid(m);
    bool expected_closed = c <= 2 * a;
    CHECK(r.closed_under_addition == expected_closed);
    if (!r.closed_under_addition) {
      ++rejected;
      REQUIRE(r.witness);
      CHECK(m.contains(r.witness->first));
      CHECK(m.contains(r.witness->second));
      CHECK_FALSE(m.contains(r.witness->first + r.witness->second));
    }
  }
  CHECK(rejected == 100);
}
