#include "intr/tropical_minval.hpp"

#include <algorithm>
#include <sstream>

#include "intr/interval_set.hpp"

namespace intr {

PiecewiseLinear::PiecewiseLinear(std::vector<GroupElement> breakpoints, std::vector<LinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw PreconditionError("piecewise-linear function needs one more piece than breakpoints");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (compare(breakpoints_[i - 1], breakpoints_[i]) >= 0) throw PreconditionError("breakpoints must increase");
  }
  simplify();
}

void PiecewiseLinear::simplify() {
  std::vector<GroupElement> bps;
  std::vector<LinePiece> ps{pieces_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (pieces_[i + 1] == ps.back()) continue;
    bps.push_back(breakpoints_[i]);
    ps.push_back(pieces_[i + 1]);
  }
  breakpoints_ = std::move(bps);
  pieces_ = std::move(ps);
}

std::size_t PiecewiseLinear::piece_index(const GroupElement& x) const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (compare(x, breakpoints_[i]) <= 0) return i;
  }
  return breakpoints_.size();
}

GroupElement PiecewiseLinear::evaluate(const GroupElement& x) const {
  return pieces_[piece_index(x)].at(x);
}

bool PiecewiseLinear::continuous() const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!(pieces_[i].at(breakpoints_[i]) == pieces_[i + 1].at(breakpoints_[i]))) return false;
  }
  return true;
}

bool PiecewiseLinear::concave() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].slope >= pieces_[i - 1].slope) return false;
  }
  return true;
}

namespace {

PiecewiseLinear combine(const PiecewiseLinear& f, const PiecewiseLinear& g, long sign) {
  std::vector<GroupElement> merged = f.breakpoints();
  merged.insert(merged.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(merged.begin(), merged.end(), GroupLess{});
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<LinePiece> pieces;
  for (std::size_t k = 0; k <= merged.size(); ++k) {
    const LinePiece& a = k < merged.size() ? f.pieces()[f.piece_index(merged[k])] : f.pieces().back();
    const LinePiece& b = k < merged.size() ? g.pieces()[g.piece_index(merged[k])] : g.pieces().back();
    pieces.push_back({a.slope + sign * b.slope, a.intercept + b.intercept * Rational(sign)});
  }
  return PiecewiseLinear(std::move(merged), std::move(pieces));
}

std::string piece_to_string(const LinePiece& p) {
  if (p.slope == 0) return p.intercept.to_string();
  std::string lin = (p.slope == 1 ? "" : p.slope == -1 ? "-" : std::to_string(p.slope)) + "x";
  if (p.intercept.is_zero()) return lin;
  if (p.slope > 0) return p.intercept.to_string() + " + " + lin;
  return p.intercept.to_string() + " - " + lin.substr(1);
}

}  // namespace

PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return combine(f, g, 1);
}

PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return combine(f, g, -1);
}

PiecewiseLinear PiecewiseLinear::operator-() const {
  return scaled(-1);
}

PiecewiseLinear PiecewiseLinear::scaled(long k) const {
  if (k == 0) return constant(0);
  std::vector<LinePiece> ps;
  for (const LinePiece& p : pieces_) ps.push_back({p.slope * k, p.intercept * Rational(k)});
  return PiecewiseLinear(breakpoints_, std::move(ps));
}

PiecewiseLinear PiecewiseLinear::shifted(const GroupElement& s) const {
  std::vector<GroupElement> bps;
  for (const GroupElement& b : breakpoints_) bps.push_back(b + s);
  std::vector<LinePiece> ps;
  for (const LinePiece& p : pieces_) ps.push_back({p.slope, p.intercept - s * Rational(p.slope)});
  return PiecewiseLinear(std::move(bps), std::move(ps));
}

std::string PiecewiseLinear::to_string() const {
  if (breakpoints_.empty()) return piece_to_string(pieces_.front());
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << "; ";
    os << piece_to_string(pieces_[i]) << " on ";
    os << (i == 0 ? "(-inf" : "[" + breakpoints_[i - 1].to_string()) << ",";
    os << (i == breakpoints_.size() ? "inf)" : breakpoints_[i].to_string() + "]");
  }
  return os.str();
}

PiecewiseLinear envelope(const std::vector<std::pair<long, GroupElement>>& lines) {
  if (lines.empty()) throw PreconditionError("envelope of an empty family");
  std::vector<LinePiece> sorted;
  for (const auto& [n, v] : lines) sorted.push_back({n, v});
  // Steepest first: it is lowest as x -> -inf.
  std::sort(sorted.begin(), sorted.end(), [](const LinePiece& a, const LinePiece& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return compare(a.intercept, b.intercept) < 0;
  });
  auto cross = [](const LinePiece& a, const LinePiece& b) {
    return (b.intercept - a.intercept) / Rational(a.slope - b.slope);
  };
  std::vector<LinePiece> hull;
  for (const LinePiece& l : sorted) {
    if (!hull.empty() && hull.back().slope == l.slope) continue;  // higher intercept
    while (hull.size() >= 2 &&
           compare(cross(hull[hull.size() - 2], l), cross(hull[hull.size() - 2], hull.back())) <= 0) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  std::vector<GroupElement> bps;
  for (std::size_t i = 1; i < hull.size(); ++i) bps.push_back(cross(hull[i - 1], hull[i]));
  return PiecewiseLinear(std::move(bps), std::move(hull));
}

namespace {

// The interval of piece i.
Interval piece_interval(const PiecewiseLinear& f, std::size_t i) {
  Interval iv;
  if (i > 0) iv.lo = f.breakpoints()[i - 1];
  if (i < f.breakpoints().size()) {
    iv.hi = f.breakpoints()[i];
    iv.hi_closed = true;
  }
  return iv;
}

bool unbounded_below(const PiecewiseLinear& f) {
  return f.pieces().front().slope > 0 || f.pieces().back().slope < 0;
}

}  // namespace

Extremum infimum_over(const PiecewiseLinear& f, const Lattice& lattice) {
  Extremum r;
  if (unbounded_below(f)) return r;
  if (lattice.kind() == Lattice::Kind::Integers) {
    std::vector<GroupElement> pts;
    for (const GroupElement& b : f.breakpoints()) {
      pts.emplace_back(Rational(b.floor()));
      pts.emplace_back(Rational(b.ceil()));
    }
    if (pts.empty()) pts.emplace_back(0);
    for (const GroupElement& p : pts) {
      GroupElement val = f.evaluate(p);
      if (!r.value || compare(val, *r.value) < 0) {
        r.value = val;
        r.at = p;
      }
    }
    r.attained = true;
    return r;
  }
  if (f.breakpoints().empty()) {
    r.value = f.pieces().front().intercept;
  } else {
    for (const GroupElement& b : f.breakpoints()) {
      GroupElement val = f.evaluate(b);
      if (!r.value || compare(val, *r.value) < 0) r.value = val;
    }
  }
  for (const GroupElement& b : f.breakpoints()) {
    if (f.evaluate(b) == *r.value && in_group(b, lattice)) {
      r.attained = true;
      r.at = b;
      return r;
    }
  }
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const LinePiece& p = f.pieces()[i];
    if (p.slope != 0 || !(p.intercept == *r.value)) continue;
    if (auto x = lattice_point_in(piece_interval(f, i), lattice)) {
      r.attained = true;
      r.at = x;
      return r;
    }
  }
  return r;
}

Extremum supremum_over(const PiecewiseLinear& f, const Lattice& lattice) {
  Extremum r = infimum_over(-f, lattice);
  if (r.value) r.value = -*r.value;
  return r;
}

std::string to_string(DichotomyKind k) {
  switch (k) {
    case DichotomyKind::IdenticallyZero: return "identically-zero";
    case DichotomyKind::StrictlyPositive: return "strictly-positive";
    case DichotomyKind::Mixed: return "mixed";
  }
  return "mixed";
}

Dichotomy dichotomy(const PiecewiseLinear& f) {
  Dichotomy d;
  if (f.is_zero()) {
    d.kind = DichotomyKind::IdenticallyZero;
    return d;
  }
  const auto& bps = f.breakpoints();
  if (f.pieces().front().slope > 0) {
    long x = bps.empty() ? 0 : bps.front().floor().get_si() - 1;
    while (f.evaluate(x).sign() >= 0) --x;
    d.witness = GroupElement(x);
    return d;
  }
  if (f.pieces().back().slope < 0) {
    long x = bps.empty() ? 0 : bps.back().ceil().get_si() + 1;
    while (f.evaluate(x).sign() >= 0) ++x;
    d.witness = GroupElement(x);
    return d;
  }
  // Bounded below: the minimum is at a breakpoint or on a flat function.
  GroupElement at = bps.empty() ? GroupElement(0) : bps.front();
  for (const GroupElement& b : bps) {
    if (compare(f.evaluate(b), f.evaluate(at)) < 0) at = b;
  }
  if (f.evaluate(at).sign() > 0) {
    d.kind = DichotomyKind::StrictlyPositive;
    return d;
  }
  d.witness = at;
  return d;
}

}  // namespace intr
