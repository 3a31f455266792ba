#include "intr/ordered_group.hpp"

#include <cmath>
#include <sstream>

namespace intr {

std::string to_string(const Rational& q) {
  return q.get_str();
}

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

GroupDescriptor GroupDescriptor::real_quadratic(std::int64_t d) {
  if (d < 2 || !is_squarefree(d)) {
    throw PreconditionError("radicand must be a squarefree integer >= 2, got " + std::to_string(d));
  }
  return {Kind::RealQuadratic, d};
}

Lattice Lattice::quadratic_integers(std::int64_t d) {
  GroupDescriptor::real_quadratic(d);
  return Lattice(Kind::QuadraticIntegers, d);
}

Lattice Lattice::quadratic_field(std::int64_t d) {
  GroupDescriptor::real_quadratic(d);
  return Lattice(Kind::QuadraticField, d);
}

GroupDescriptor Lattice::descriptor() const {
  if (d_ == 0) return GroupDescriptor::rationals();
  return GroupDescriptor::real_quadratic(d_);
}

std::string Lattice::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::QuadraticIntegers: return "Z[sqrt" + std::to_string(d_) + "]";
    case Kind::QuadraticField: return "Q(sqrt" + std::to_string(d_) + ")";
  }
  return "?";
}

GroupElement::GroupElement(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && d_ < 2) throw PreconditionError("irrational part requires a radicand >= 2");
  if (b_ == 0) d_ = 0;
}

std::int64_t common_radicand(const GroupElement& x, const GroupElement& y) {
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0 || y.radicand() == x.radicand()) return x.radicand();
  throw DescriptorMismatch("value group mismatch: sqrt" + std::to_string(x.radicand()) + " vs sqrt" +
                           std::to_string(y.radicand()));
}

GroupElement& GroupElement::operator+=(const GroupElement& y) {
  // mpq arithmetic keeps results canonical
  if (y.b_ == 0) {
    a_ += y.a_;
    return *this;
  }
  const std::int64_t d = common_radicand(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  d_ = b_ == 0 ? 0 : d;
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& y) {
  return *this += -y;
}

GroupElement operator*(const GroupElement& x, const Rational& q) {
  return {x.a_ * q, x.b_ * q, x.d_};
}

GroupElement operator/(const GroupElement& x, const Rational& q) {
  if (q == 0) throw PreconditionError("division of a group element by zero");
  return {x.a_ / q, x.b_ / q, x.d_};
}

int GroupElement::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by a^2 vs d*b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  return compare(x, y);
}

std::strong_ordering compare(const GroupElement& x, const GroupElement& y) {
  if (x.b_ == 0 && y.b_ == 0) {
    int c = cmp(x.a_, y.a_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  common_radicand(x, y);
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool GroupLess::operator()(const GroupElement& x, const GroupElement& y) const {
  return compare(x, y) < 0;
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
  return x + y;
}

GroupElement min(const GroupElement& x, const GroupElement& y) {
  return compare(y, x) < 0 ? y : x;
}

GroupElement max(const GroupElement& x, const GroupElement& y) {
  return compare(y, x) > 0 ? y : x;
}

GroupElement scale(const GroupElement& x, const Rational& q) {
  return x * q;
}

double GroupElement::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

Integer GroupElement::floor() const {
  if (b_ == 0) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return r;
  }
  Integer n(std::floor(to_double()));
  while (compare(*this, GroupElement(Rational(n))) < 0) n -= 1;
  while (compare(*this, GroupElement(Rational(n + 1))) >= 0) n += 1;
  return n;
}

Integer GroupElement::ceil() const {
  Integer f = floor();
  if (*this == GroupElement(Rational(f))) return f;
  return f + 1;
}

std::string GroupElement::to_string() const {
  if (b_ == 0) return intr::to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << intr::to_string(a_);
  if (b_ < 0) {
    os << "-";
  } else if (a_ != 0) {
    os << "+";
  }
  os << intr::to_string(abs(b_)) << "*sqrt" << d_;
  return os.str();
}

namespace {

bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

bool strictly_inside(const GroupElement& x, const std::optional<GroupElement>& lo,
                     const std::optional<GroupElement>& hi) {
  return (!lo || compare(*lo, x) < 0) && (!hi || compare(x, *hi) < 0);
}

}  // namespace

bool in_group(const GroupElement& x, const Lattice& lattice) {
  switch (lattice.kind()) {
    case Lattice::Kind::Integers:
      return x.is_rational() && is_integer(x.rational_part());
    case Lattice::Kind::Rationals:
      return x.is_rational();
    case Lattice::Kind::QuadraticIntegers:
      return is_integer(x.rational_part()) && is_integer(x.sqrt_part()) &&
             (x.is_rational() || x.radicand() == lattice.radicand());
    case Lattice::Kind::QuadraticField:
      return x.is_rational() || x.radicand() == lattice.radicand();
  }
  return false;
}

std::optional<GroupElement> simple_lattice_point(const std::optional<GroupElement>& lo_in,
                                                 const std::optional<GroupElement>& hi_in,
                                                 const Lattice& lattice) {
  std::optional<GroupElement> lo = lo_in;
  std::optional<GroupElement> hi = hi_in;
  if (lo && hi && compare(*lo, *hi) >= 0) return std::nullopt;
  if (!lo && !hi) return GroupElement(0);
  if (!lo) lo = *hi - GroupElement(2);
  if (!hi) hi = *lo + GroupElement(2);

  switch (lattice.kind()) {
    case Lattice::Kind::Integers: {
      GroupElement candidate(Rational(lo->floor() + 1));
      if (strictly_inside(candidate, lo, hi)) return candidate;
      return std::nullopt;
    }
    case Lattice::Kind::Rationals:
    case Lattice::Kind::QuadraticField: {
      if (lo->is_rational() && hi->is_rational()) return (*lo + *hi) / Rational(2);
      if (lattice.kind() == Lattice::Kind::QuadraticField) return (*lo + *hi) / Rational(2);
      for (long q = 1;; ++q) {
        Integer m = (*lo * Rational(q)).floor() + 1;
        GroupElement candidate(Rational(m) / Rational(q));
        if (strictly_inside(candidate, lo, hi)) return candidate;
      }
    }
    case Lattice::Kind::QuadraticIntegers: {
      const std::int64_t d = lattice.radicand();
      const GroupElement root = GroupElement::sqrt(d);
      // Dense lattice: the search terminates; the bound only protects against
      // absurdly narrow intervals.
      for (long h = 0; h < 1000000; ++h) {
        std::optional<GroupElement> best;
        for (long n : {h, -h}) {
          GroupElement shift = root * Rational(n);
          Integer m = (*lo - shift).floor() + 1;
          GroupElement candidate = GroupElement(Rational(m)) + shift;
          if (strictly_inside(candidate, lo, hi) && (!best || compare(candidate, *best) < 0)) {
            best = candidate;
          }
          if (h == 0) break;
        }
        if (best) return best;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

GroupElement small_positive_element(const Lattice& lattice, const GroupElement& bound) {
  if (!lattice.dense()) throw PreconditionError("Z has a minimal positive element");
  if (bound.sign() <= 0) throw PreconditionError("bound must be positive");
  if (lattice.kind() == Lattice::Kind::QuadraticIntegers) {
    // u = sqrt(d) - floor(sqrt(d)) lies in (0,1); its powers shrink to 0.
    const std::int64_t d = lattice.radicand();
    GroupElement root = GroupElement::sqrt(d);
    GroupElement u = root - GroupElement(Rational(root.floor()));
    GroupElement p = u;
    while (compare(p, bound) >= 0) {
      // (x + y sqrt d)(r + s sqrt d)
      Rational x = p.rational_part(), y = p.sqrt_part();
      Rational r = u.rational_part(), s = u.sqrt_part();
      p = GroupElement(x * r + y * s * Rational(d), x * s + y * r, d);
    }
    return p;
  }
  // Q and Q(sqrt d): 1/n with n > 1/bound.
  Integer n = 2;
  while (compare(GroupElement(Rational(1) / Rational(n)), bound) >= 0) n *= 2;
  return GroupElement(Rational(1) / Rational(n));
}

}  // namespace intr
