#include "intr/interval_set.hpp"

#include <algorithm>
#include <sstream>

namespace intr {

namespace {

// Ordering of lower endpoints: -inf first, and at equal values a closed
// endpoint starts "earlier" than an open one.
bool lower_before(const Interval& a, const Interval& b) {
  if (!a.lo) return b.lo.has_value();
  if (!b.lo) return false;
  auto c = compare(*a.lo, *b.lo);
  if (c != 0) return c < 0;
  return a.lo_closed && !b.lo_closed;
}

// Is the upper endpoint of a below the upper endpoint of b?
bool upper_below(const Interval& a, const Interval& b) {
  if (!a.hi) return false;
  if (!b.hi) return true;
  auto c = compare(*a.hi, *b.hi);
  if (c != 0) return c < 0;
  return !a.hi_closed && b.hi_closed;
}

}  // namespace

bool Interval::empty() const {
  if (!lo || !hi) return false;
  auto c = compare(*lo, *hi);
  if (c > 0) return true;
  if (c == 0) return !(lo_closed && hi_closed);
  return false;
}

bool Interval::is_point() const {
  return lo && hi && *lo == *hi && lo_closed && hi_closed;
}

bool Interval::contains(const GroupElement& x) const {
  if (lo) {
    auto c = compare(x, *lo);
    if (c < 0 || (c == 0 && !lo_closed)) return false;
  }
  if (hi) {
    auto c = compare(x, *hi);
    if (c > 0 || (c == 0 && !hi_closed)) return false;
  }
  return true;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << (lo && lo_closed ? "[" : "(");
  os << (lo ? lo->to_string() : "-inf") << "," << (hi ? hi->to_string() : "inf");
  os << (hi && hi_closed ? "]" : ")");
  return os.str();
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  const Interval& lower = lower_before(a, b) ? b : a;
  r.lo = lower.lo;
  r.lo_closed = lower.lo_closed;
  const Interval& upper = upper_below(a, b) ? a : b;
  r.hi = upper.hi;
  r.hi_closed = upper.hi_closed;
  return r;
}

Interval sum(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo && b.lo) {
    r.lo = *a.lo + *b.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi && b.hi) {
    r.hi = *a.hi + *b.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

std::optional<GroupElement> lattice_point_in(const Interval& interval, const Lattice& lattice) {
  if (interval.empty()) return std::nullopt;
  if (interval.is_point()) {
    if (in_group(*interval.lo, lattice)) return interval.lo;
    return std::nullopt;
  }
  if (lattice.kind() == Lattice::Kind::Integers) {
    GroupElement candidate;
    if (interval.lo) {
      Integer c = interval.lo->ceil();
      if (!interval.lo_closed && GroupElement(Rational(c)) == *interval.lo) c += 1;
      candidate = GroupElement(Rational(c));
    } else {
      Integer f = interval.hi->floor();
      if (!interval.hi_closed && GroupElement(Rational(f)) == *interval.hi) f -= 1;
      candidate = GroupElement(Rational(f));
    }
    if (interval.contains(candidate)) return candidate;
    return std::nullopt;
  }
  return simple_lattice_point(interval.lo, interval.hi, lattice);
}

bool contains_lattice_point(const Interval& interval, const Lattice& lattice) {
  return lattice_point_in(interval, lattice).has_value();
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.empty(); });
  std::sort(parts.begin(), parts.end(), lower_before);
  for (Interval& next : parts) {
    if (parts_.empty()) {
      parts_.push_back(std::move(next));
      continue;
    }
    Interval& cur = parts_.back();
    bool joins = !cur.hi || !next.lo;
    if (!joins) {
      auto c = compare(*next.lo, *cur.hi);
      joins = c < 0 || (c == 0 && (cur.hi_closed || next.lo_closed));
    }
    if (joins) {
      if (upper_below(cur, next)) {
        cur.hi = next.hi;
        cur.hi_closed = next.hi_closed;
      }
    } else {
      parts_.push_back(std::move(next));
    }
  }
}

bool IntervalSet::contains(const GroupElement& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

bool IntervalSet::contains(const Interval& interval) const {
  if (interval.empty()) return true;
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& p) { return intr::intersect(p, interval) == interval; });
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) out.push_back(intr::intersect(a, b));
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  std::optional<GroupElement> prev;
  bool prev_closed = false;  // closedness of the previous part's upper end
  bool at_minus_inf = true;
  for (const Interval& p : parts_) {
    if (p.lo) {
      Interval gap;
      if (!at_minus_inf) {
        gap.lo = prev;
        gap.lo_closed = !prev_closed;
      }
      gap.hi = p.lo;
      gap.hi_closed = !p.lo_closed;
      out.push_back(gap);
    }
    if (!p.hi) return IntervalSet(std::move(out));
    prev = p.hi;
    prev_closed = p.hi_closed;
    at_minus_inf = false;
  }
  Interval tail;
  if (!at_minus_inf) {
    tail.lo = prev;
    tail.lo_closed = !prev_closed;
  }
  out.push_back(tail);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::difference(const IntervalSet& other) const {
  return intersect(other.complement());
}

IntervalSet IntervalSet::sum(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) out.push_back(intr::sum(a, b));
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::reflect(const GroupElement& w) const {
  std::vector<Interval> out;
  for (const Interval& p : parts_) {
    Interval r;
    if (p.hi) {
      r.lo = w - *p.hi;
      r.lo_closed = p.hi_closed;
    }
    if (p.lo) {
      r.hi = w - *p.lo;
      r.hi_closed = p.lo_closed;
    }
    out.push_back(r);
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::scaled(const Rational& q) const {
  if (q <= 0) throw PreconditionError("interval scaling needs a positive factor");
  std::vector<Interval> out;
  for (Interval p : parts_) {
    if (p.lo) p.lo = *p.lo * q;
    if (p.hi) p.hi = *p.hi * q;
    out.push_back(p);
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::lattice_empty(const Lattice& lattice) const {
  return !lattice_point(lattice).has_value();
}

std::optional<GroupElement> IntervalSet::lattice_point(const Lattice& lattice) const {
  for (const Interval& p : parts_) {
    if (auto x = lattice_point_in(p, lattice)) return x;
  }
  return std::nullopt;
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (const Interval& p : parts_) {
    if (!s.empty()) s += " u ";
    s += p.is_point() ? "{" + p.lo->to_string() + "}" : p.to_string();
  }
  return s;
}

}  // namespace intr
