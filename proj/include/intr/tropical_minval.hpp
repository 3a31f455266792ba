#pragma once

// Piecewise-linear functions on QGamma with integer slopes: lower envelopes
// of families of lines, their differences, extrema and sign analysis.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intr/ordered_group.hpp"

namespace intr {

struct LinePiece {
  long slope = 0;
  GroupElement intercept;

  GroupElement at(const GroupElement& x) const { return intercept + x * Rational(slope); }
  bool operator==(const LinePiece&) const = default;
};

// Piece i is used on [breakpoints[i-1], breakpoints[i]]; the first and last
// pieces extend to -inf and +inf.
class PiecewiseLinear {
 public:
  PiecewiseLinear() : pieces_{LinePiece{}} {}
  PiecewiseLinear(std::vector<GroupElement> breakpoints, std::vector<LinePiece> pieces);

  static PiecewiseLinear constant(const GroupElement& c) { return PiecewiseLinear({}, {{0, c}}); }
  static PiecewiseLinear line(long slope, const GroupElement& intercept) {
    return PiecewiseLinear({}, {{slope, intercept}});
  }

  const std::vector<GroupElement>& breakpoints() const { return breakpoints_; }
  const std::vector<LinePiece>& pieces() const { return pieces_; }
  // Index of the piece used at x (the left one at a breakpoint).
  std::size_t piece_index(const GroupElement& x) const;
  GroupElement evaluate(const GroupElement& x) const;

  bool continuous() const;
  // Slopes strictly decrease from left to right.
  bool concave() const;
  bool is_constant() const { return pieces_.size() == 1 && pieces_.front().slope == 0; }
  bool is_zero() const { return is_constant() && pieces_.front().intercept.is_zero(); }

  friend PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g);
  friend PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g);
  PiecewiseLinear operator-() const;
  PiecewiseLinear scaled(long k) const;
  // x -> f(x - s)
  PiecewiseLinear shifted(const GroupElement& s) const;

  bool operator==(const PiecewiseLinear&) const = default;

  // "2x on (-inf,1/2]; 1 on [1/2,inf)"
  std::string to_string() const;

 private:
  void simplify();

  std::vector<GroupElement> breakpoints_;
  std::vector<LinePiece> pieces_;
};

// Lower envelope x -> min_i (v_i + n_i x) of lines given as (n_i, v_i).
// Throws PreconditionError on an empty family.
PiecewiseLinear envelope(const std::vector<std::pair<long, GroupElement>>& lines);

struct Extremum {
  std::optional<GroupElement> value;  // nullopt: unbounded
  bool attained = false;              // attained at a point of the lattice
  std::optional<GroupElement> at;     // a lattice point attaining it
};

// Infimum and supremum over the lattice. For Z only integer points are
// considered; for dense lattices the extremum over QGamma is reported and
// attained records whether a lattice point reaches it.
Extremum infimum_over(const PiecewiseLinear& f, const Lattice& lattice);
Extremum supremum_over(const PiecewiseLinear& f, const Lattice& lattice);

enum class DichotomyKind { IdenticallyZero, StrictlyPositive, Mixed };
std::string to_string(DichotomyKind k);

struct Dichotomy {
  DichotomyKind kind = DichotomyKind::Mixed;
  std::optional<GroupElement> witness;  // for Mixed: a point where f < 0, or f = 0 if f >= 0
};
Dichotomy dichotomy(const PiecewiseLinear& f);

}  // namespace intr
