#pragma once

// Finite unions of real intervals with endpoints in QGamma. This is the exact
// calculus behind gap monoids: closure under addition, atoms and
// terminality all reduce to sums, differences and containment of these sets.

#include <optional>
#include <string>
#include <vector>

#include "intr/ordered_group.hpp"

namespace intr {

// An interval of R. A missing endpoint means -inf (lo) or +inf (hi); the
// corresponding closed flag is then ignored.
struct Interval {
  std::optional<GroupElement> lo;
  bool lo_closed = true;
  std::optional<GroupElement> hi;
  bool hi_closed = false;

  static Interval closed(const GroupElement& a, const GroupElement& b) { return {a, true, b, true}; }
  static Interval open(const GroupElement& a, const GroupElement& b) { return {a, false, b, false}; }
  static Interval point(const GroupElement& a) { return closed(a, a); }
  static Interval at_least(const GroupElement& a) { return {a, true, std::nullopt, false}; }
  static Interval greater_than(const GroupElement& a) { return {a, false, std::nullopt, false}; }

  bool empty() const;
  bool bounded_above() const { return hi.has_value(); }
  bool is_point() const;
  bool contains(const GroupElement& x) const;

  // Real-interval notation: "[1,2)", "(3,inf)".
  std::string to_string() const;

  bool operator==(const Interval&) const = default;
};

Interval intersect(const Interval& a, const Interval& b);
// Minkowski sum {x + y}.
Interval sum(const Interval& a, const Interval& b);

// Does the interval contain an element of the lattice? For dense lattices any
// interval with interior qualifies; points and Z need an explicit check.
bool contains_lattice_point(const Interval& interval, const Lattice& lattice);
// Some lattice element of the interval, preferring the midpoint / simplest.
std::optional<GroupElement> lattice_point_in(const Interval& interval, const Lattice& lattice);

// Sorted, disjoint, non-adjacent list of non-empty intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const GroupElement& x) const;
  bool contains(const Interval& interval) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet complement() const;
  IntervalSet difference(const IntervalSet& other) const;
  IntervalSet sum(const IntervalSet& other) const;
  // {w - x : x in this}
  IntervalSet reflect(const GroupElement& w) const;
  // {q * x : x in this} for q > 0
  IntervalSet scaled(const Rational& q) const;

  // True when no lattice element lies in the set.
  bool lattice_empty(const Lattice& lattice) const;
  std::optional<GroupElement> lattice_point(const Lattice& lattice) const;

  std::string to_string() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace intr
