#include "intr/gap_monoid.hpp"

#include <algorithm>
#include <sstream>

namespace intr {

bool MonoidSpec::contains(const GroupElement& x) const {
  if (x.is_zero()) return true;
  if (!in_group(x, group)) return false;
  return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet MonoidSpec::positive_part() const {
  return IntervalSet(intervals);
}

void MonoidSpec::validate_shape() const {
  if (intervals.empty()) throw PreconditionError("a gap monoid needs at least one interval");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& cur = intervals[i];
    if (!cur.lo) throw PreconditionError("interval " + cur.to_string() + " is unbounded below");
    if (cur.empty()) throw PreconditionError("interval " + cur.to_string() + " is empty");
    int s = cur.lo->sign();
    if (s < 0 || (s == 0 && cur.lo_closed)) {
      throw PreconditionError("interval " + cur.to_string() + " must lie in (0, inf)");
    }
    bool last = i + 1 == intervals.size();
    if (last && cur.hi) throw PreconditionError("the last interval must be unbounded above");
    if (!last) {
      if (!cur.hi) throw PreconditionError("only the last interval may be unbounded");
      const Interval& next = intervals[i + 1];
      auto c = compare(*cur.hi, *next.lo);
      if (c > 0 || (c == 0 && cur.hi_closed && next.lo_closed)) {
        throw PreconditionError("intervals " + cur.to_string() + " and " + next.to_string() +
                                " overlap or are out of order");
      }
    }
  }
}

std::string MonoidSpec::to_string() const {
  std::string s = group.to_string() + ": 0";
  for (const Interval& i : intervals) {
    s += " u ";
    s += i.is_point() ? i.lo->to_string() : i.to_string();
  }
  return s;
}

MonoidSpec MonoidSpec::one_gap(const Lattice& group) {
  return MonoidSpec{group, {Interval::at_least(1)}};
}

MonoidSpec MonoidSpec::two_three_four() {
  return MonoidSpec{Lattice::rationals(), {Interval::closed(2, 3), Interval::at_least(4)}};
}

MonoidSpec make_monoid(const Lattice& group, std::vector<Interval> intervals) {
  MonoidSpec spec{group, std::move(intervals)};
  spec.validate_shape();
  ClosureReport report = check_monoid(spec);
  if (!report.closed_under_addition) {
    std::string msg = "not closed under addition";
    if (report.witness) {
      msg += ": " + report.witness->first.to_string() + " + " + report.witness->second.to_string();
    }
    throw PreconditionError(msg);
  }
  return spec;
}

namespace {

std::vector<GroupElement> closed_lattice_endpoints(const Interval& i, const Lattice& lattice) {
  std::vector<GroupElement> out;
  if (i.hi && i.hi_closed && in_group(*i.hi, lattice)) out.push_back(*i.hi);
  if (i.lo && i.lo_closed && in_group(*i.lo, lattice)) out.push_back(*i.lo);
  return out;
}

}  // namespace

ClosureReport check_monoid(const MonoidSpec& spec) {
  const IntervalSet s = spec.positive_part();
  const Lattice& lattice = spec.group;
  for (const Interval& a : s.parts()) {
    for (const Interval& b : s.parts()) {
      IntervalSet missing = IntervalSet({sum(a, b)}).difference(s);
      if (missing.lattice_empty(lattice)) continue;
      // Endpoint pairs first: they give the most readable witnesses.
      for (const GroupElement& x : closed_lattice_endpoints(a, lattice)) {
        for (const GroupElement& y : closed_lattice_endpoints(b, lattice)) {
          if (!spec.contains(x + y)) return {false, std::make_pair(x, y)};
        }
      }
      for (const Interval& gap : missing.parts()) {
        auto w = lattice_point_in(gap, lattice);
        if (!w) continue;
        IntervalSet xs = IntervalSet({a}).intersect(IntervalSet({b}).reflect(*w));
        if (auto x = xs.lattice_point(lattice)) return {false, std::make_pair(*x, *w - *x)};
      }
    }
  }
  return {};
}

std::optional<AwayFromZero> is_bounded_away_from_zero(const MonoidSpec& spec) {
  IntervalSet s = spec.positive_part();
  if (s.empty()) return std::nullopt;
  const Interval& first = s.parts().front();
  if (!first.lo || first.lo->sign() <= 0) return std::nullopt;
  AwayFromZero out;
  out.bound = *first.lo;
  out.attained = first.lo_closed && in_group(*first.lo, spec.group);
  if (in_group(*first.lo, spec.group)) {
    out.group_bound = *first.lo;
  } else {
    Interval below{GroupElement(0), false, *first.lo, true};
    auto g = lattice_point_in(below, spec.group);
    if (!g) return std::nullopt;
    out.group_bound = *g;
  }
  return out;
}

TerminalReport is_integrally_terminal_for(const MonoidSpec& spec, const GroupElement& gamma) {
  TerminalReport report;
  IntervalSet above({Interval::greater_than(gamma)});
  IntervalSet missing = above.difference(spec.positive_part());
  report.witness = missing.lattice_point(spec.group);
  report.terminal = !report.witness.has_value();
  return report;
}

std::optional<GroupElement> find_integrally_terminal(const MonoidSpec& spec) {
  IntervalSet s = spec.positive_part();
  if (s.empty() || s.parts().back().hi) return std::nullopt;
  const Interval& tail = s.parts().back();
  if (!tail.lo) return GroupElement(0);
  if (in_group(*tail.lo, spec.group)) return *tail.lo;
  if (spec.group.kind() == Lattice::Kind::Integers) return GroupElement(Rational(tail.lo->floor()));
  // Dense group and irrational endpoint: no least choice exists, take a
  // simple element just above it.
  return simple_lattice_point(*tail.lo, *tail.lo + GroupElement(1), spec.group);
}

bool has_no_minimal_positive(const Lattice& lattice) {
  return lattice.dense();
}

IntervalSet monoid_atoms(const MonoidSpec& spec) {
  IntervalSet s = spec.positive_part();
  return s.difference(s.sum(s));
}

GroupElement flat_zone_bound(const MonoidSpec& spec) {
  IntervalSet gaps = spec.positive_part().complement().intersect(IntervalSet({Interval::greater_than(0)}));
  GroupElement bound(0);
  for (const Interval& g : gaps.parts()) {
    if (g.is_point() || !g.hi) continue;
    if (compare(*g.hi, bound) > 0) bound = *g.hi;
  }
  return bound;
}

LengthSet LengthSet::from_set(const std::set<long>& lengths) {
  LengthSet out;
  if (lengths.empty()) {
    out.full = false;
    out.min = 0;
    out.max = -1;
    return out;
  }
  out.min = *lengths.begin();
  out.max = *lengths.rbegin();
  for (long l = out.min; l <= out.max; ++l) {
    if (!lengths.count(l)) out.exceptional.push_back(l);
  }
  out.full = out.exceptional.empty();
  return out;
}

LengthSet LengthSet::range(long lo, long hi) {
  LengthSet out;
  out.min = lo;
  out.max = hi;
  return out;
}

std::set<long> LengthSet::values() const {
  std::set<long> out;
  for (long l = min; l <= max; ++l) out.insert(l);
  for (long l : exceptional) out.erase(l);
  return out;
}

bool LengthSet::contains(long l) const {
  if (l < min || l > max) return false;
  return std::find(exceptional.begin(), exceptional.end(), l) == exceptional.end();
}

std::string LengthSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long l : values()) {
    if (!first) os << ",";
    os << l;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

void require_one_gap(const MonoidSpec& spec) {
  IntervalSet s = spec.positive_part();
  if (s.parts().size() != 1 || !(s.parts()[0] == Interval::at_least(1))) {
    throw PreconditionError("closed forms need the one-gap monoid 0 u [1,inf), got " + spec.to_string());
  }
}

}  // namespace

Integer limit_lower_endpoint(const GroupElement& v) {
  return (v / Rational(2)).floor() + 1;
}

LengthSet length_set_closed_form(const MonoidSpec& spec, const GroupElement& v) {
  require_one_gap(spec);
  if (compare(v, GroupElement(1)) < 0) throw PreconditionError("v must be at least 1, got " + v.to_string());
  return LengthSet::range(limit_lower_endpoint(v).get_si(), v.floor().get_si());
}

long catenary_closed_form(const MonoidSpec& spec, const GroupElement& v) {
  require_one_gap(spec);
  if (compare(v, GroupElement(1)) < 0) throw PreconditionError("v must be at least 1, got " + v.to_string());
  if (compare(v, GroupElement(2)) < 0) return 0;
  if (compare(v, GroupElement(3)) < 0) return 2;
  return 3;
}

namespace {

bool on_grid(const GroupElement& x, long q) {
  if (!x.is_rational()) return false;
  Rational scaled = x.rational_part() * q;
  return scaled.get_den() == 1;
}

// Integer range [first, last] of k with k/Q in the interval (last may be
// clipped to `top`). Empty when first > last.
std::pair<long, long> grid_range(const Interval& i, long Q, long top) {
  long first = 1;
  long last = top;
  if (i.lo) {
    Rational c = i.lo->rational_part() * Q;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    bool exact = c.get_den() == 1;
    Integer k = (exact && i.lo_closed) ? f : Integer(f + 1);
    if (k > first) first = k.get_si();
  }
  if (i.hi) {
    Rational c = i.hi->rational_part() * Q;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    bool exact = c.get_den() == 1;
    Integer k = (exact && !i.hi_closed) ? Integer(f - 1) : f;
    if (k < last) last = k.get_si();
  }
  return {first, last};
}

}  // namespace

BruteForceLengths length_set_bruteforce(const MonoidSpec& spec, const GroupElement& v, long q,
                                        std::uint64_t cap) {
  if (q < 1) throw PreconditionError("grid denominator must be positive");
  const bool integers = spec.group.kind() == Lattice::Kind::Integers;
  if (spec.group.kind() != Lattice::Kind::Rationals && !integers) {
    throw PreconditionError("grid enumeration needs Gamma = Q or Z, got " + spec.group.to_string());
  }
  if (integers) q = 1;
  if (!on_grid(v, q)) throw PreconditionError("grid mismatch: " + v.to_string() + " not in (1/" + std::to_string(q) + ")Z");
  for (const Interval& i : spec.intervals) {
    for (const auto& e : {i.lo, i.hi}) {
      if (e && !on_grid(*e, q)) {
        throw PreconditionError("grid mismatch: endpoint " + e->to_string() + " not in (1/" + std::to_string(q) + ")Z");
      }
    }
  }
  auto away = is_bounded_away_from_zero(spec);
  if (!away) throw PreconditionError("monoid is not bounded away from 0");
  if (v.sign() <= 0) throw PreconditionError("v must be positive");

  const IntervalSet atoms = monoid_atoms(spec);
  BruteForceLengths out;
  std::set<long> lengths;
  const long max_len = GroupElement(Rational(v.rational_part() / away->bound.rational_part())).floor().get_si();
  for (long len = 1; len <= max_len; ++len) {
    const long Q = integers ? 1 : q * len;
    const Rational target_q = v.rational_part() * Q;
    const long T = target_q.get_num().get_si();
    std::vector<std::pair<long, long>> ranges;
    for (const Interval& a : atoms.parts()) {
      auto r = grid_range(a, Q, T);
      if (r.first <= r.second) ranges.push_back(r);
    }
    out.states += static_cast<std::uint64_t>(len) * static_cast<std::uint64_t>(T + 1);
    if (out.states > cap) {
      out.cap_exceeded = true;
      break;
    }
    // reach[j][s]: s is a sum of exactly j atom grid values.
    std::vector<std::vector<char>> reach(len + 1, std::vector<char>(T + 1, 0));
    reach[0][0] = 1;
    for (long j = 1; j <= len; ++j) {
      std::vector<long> prefix(T + 2, 0);
      for (long s = 0; s <= T; ++s) prefix[s + 1] = prefix[s] + reach[j - 1][s];
      for (long s = 0; s <= T; ++s) {
        for (const auto& [a, b] : ranges) {
          long lo = std::max(0L, s - b);
          long hi = s - a;
          if (hi < lo) continue;
          if (prefix[hi + 1] - prefix[lo] > 0) {
            reach[j][s] = 1;
            break;
          }
        }
      }
    }
    if (!reach[len][T]) continue;
    lengths.insert(len);
    std::vector<GroupElement> parts;
    long s = T;
    for (long j = len; j >= 1; --j) {
      bool found = false;
      for (const auto& [a, b] : ranges) {
        for (long k = a; k <= b && k <= s; ++k) {
          if (reach[j - 1][s - k]) {
            parts.emplace_back(Rational(k) / Rational(Q));
            s -= k;
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    out.witness[len] = parts;
  }
  out.lengths = LengthSet::from_set(lengths);
  return out;
}

}  // namespace intr
