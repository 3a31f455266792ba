#pragma once

// Gap monoids M = {0} u (I_1 u ... u I_r) n Gamma, with I_r unbounded above,
// together with the hypotheses of the atomicity theorem as decidable
// predicates and monoid-level factorization lengths.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "intr/interval_set.hpp"
#include "intr/ordered_group.hpp"

namespace intr {

struct MonoidSpec {
  Lattice group = Lattice::rationals();
  std::vector<Interval> intervals;

  // Membership of x in M (0 is always a member).
  bool contains(const GroupElement& x) const;
  // M_{>0} as a set of reals (before intersecting with Gamma).
  IntervalSet positive_part() const;
  // Throws PreconditionError unless the intervals are sorted, disjoint, have
  // positive endpoints and the last one is unbounded.
  void validate_shape() const;

  std::string to_string() const;

  // The two standard examples.
  static MonoidSpec one_gap(const Lattice& group = Lattice::rationals());
  static MonoidSpec two_three_four();
};

// Shape validation plus closure under addition; throws with the witness.
MonoidSpec make_monoid(const Lattice& group, std::vector<Interval> intervals);

struct ClosureReport {
  bool closed_under_addition = true;
  std::optional<std::pair<GroupElement, GroupElement>> witness;  // x + y not in M
};
ClosureReport check_monoid(const MonoidSpec& spec);

struct AwayFromZero {
  GroupElement bound;        // infimum of M_{>0}
  bool attained = false;     // the infimum itself belongs to M
  GroupElement group_bound;  // element of Gamma in (0, bound]
};
std::optional<AwayFromZero> is_bounded_away_from_zero(const MonoidSpec& spec);

struct TerminalReport {
  bool terminal = false;
  bool archimedean = true;  // every positive element has a multiple above gamma
  std::optional<GroupElement> witness;  // element of Gamma above gamma missing from M
};
TerminalReport is_integrally_terminal_for(const MonoidSpec& spec, const GroupElement& gamma);
std::optional<GroupElement> find_integrally_terminal(const MonoidSpec& spec);

bool has_no_minimal_positive(const Lattice& lattice);

// M_{>0} \ (M_{>0} + M_{>0}).
IntervalSet monoid_atoms(const MonoidSpec& spec);

// Upper end of the highest gap of M_{>0} inside (0, inf); values of integer
// valued rational functions strictly between 0 and this bound are rigid.
GroupElement flat_zone_bound(const MonoidSpec& spec);

struct LengthSet {
  long min = 0;
  long max = 0;
  bool full = true;
  std::vector<long> exceptional;  // holes in [min, max] when not full

  static LengthSet from_set(const std::set<long>& lengths);
  static LengthSet range(long lo, long hi);
  std::set<long> values() const;
  bool contains(long l) const;
  std::string to_string() const;
  bool operator==(const LengthSet&) const = default;
};

// Closed form for {0} u [1,inf): [floor(v/2)+1, floor(v)].
LengthSet length_set_closed_form(const MonoidSpec& spec, const GroupElement& v);
// The limit of ceil(v/r) as r -> 2 from below, evaluated as floor(v/2)+1.
Integer limit_lower_endpoint(const GroupElement& v);

struct BruteForceLengths {
  LengthSet lengths;
  bool cap_exceeded = false;
  std::uint64_t states = 0;
  std::map<long, std::vector<GroupElement>> witness;  // one multiset per length
};

// Exhaustive search for multisets of atom values summing to v. Values are
// taken on the grid (1/(q*l))Z for candidate length l; over Z the grid is Z.
BruteForceLengths length_set_bruteforce(const MonoidSpec& spec, const GroupElement& v, long q,
                                        std::uint64_t cap = 1000000);

long catenary_closed_form(const MonoidSpec& spec, const GroupElement& v);

}  // namespace intr
