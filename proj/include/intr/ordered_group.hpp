#pragma once

// Exact arithmetic in the value group Gamma and its divisible closure QGamma.
//
// Supported groups are rank one subgroups of R: Z, Q, Z + Z*sqrt(d) and
// Q(sqrt d) for squarefree d >= 2. All of them embed into Q(sqrt d) (or Q),
// so a single element type a + b*sqrt(d) with rational a, b represents both
// Gamma and QGamma; membership in Gamma is the separate `in_group` predicate.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "intr/error.hpp"

namespace intr {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Shape of the ambient field a + b*sqrt(d).
struct GroupDescriptor {
  enum class Kind { Rationals, RealQuadratic };

  Kind kind = Kind::Rationals;
  std::int64_t d = 0;  // radicand; 0 for Rationals

  static GroupDescriptor rationals() { return {}; }
  // Throws PreconditionError unless d >= 2 is squarefree.
  static GroupDescriptor real_quadratic(std::int64_t d);

  bool operator==(const GroupDescriptor&) const = default;
};

bool is_squarefree(std::int64_t d);

// The sub-lattice that defines Gamma inside QGamma.
class Lattice {
 public:
  enum class Kind { Integers, Rationals, QuadraticIntegers, QuadraticField };

  static Lattice integers() { return Lattice(Kind::Integers, 0); }
  static Lattice rationals() { return Lattice(Kind::Rationals, 0); }
  static Lattice quadratic_integers(std::int64_t d);
  static Lattice quadratic_field(std::int64_t d);

  Kind kind() const { return kind_; }
  std::int64_t radicand() const { return d_; }
  GroupDescriptor descriptor() const;

  bool divisible() const { return kind_ == Kind::Rationals || kind_ == Kind::QuadraticField; }
  // True for every supported lattice except Z: all others are dense in R.
  bool dense() const { return kind_ != Kind::Integers; }
  // "Q", "Z", "Z[sqrt2]", "Q(sqrt3)".
  std::string to_string() const;

  bool operator==(const Lattice&) const = default;

 private:
  Lattice(Kind kind, std::int64_t d) : kind_(kind), d_(d) {}

  Kind kind_;
  std::int64_t d_;
};

// a + b*sqrt(d). Elements with b == 0 are stored with d == 0 and combine with
// elements of any radicand; two irrational elements must share d.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT(implicit)
  GroupElement(long a) : a_(a) {}                                 // NOLINT(implicit)
  GroupElement(const Rational& a, const Rational& b, std::int64_t d);

  static GroupElement sqrt(std::int64_t d) { return {0, 1, d}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  Integer floor() const;
  Integer ceil() const;
  double to_double() const;

  GroupElement operator-() const { return {-a_, -b_, d_}; }
  GroupElement& operator+=(const GroupElement& y);
  GroupElement& operator-=(const GroupElement& y);

  friend GroupElement operator+(GroupElement x, const GroupElement& y) { return x += y; }
  friend GroupElement operator-(GroupElement x, const GroupElement& y) { return x -= y; }
  friend GroupElement operator*(const GroupElement& x, const Rational& q);
  friend GroupElement operator*(const Rational& q, const GroupElement& x) { return x * q; }
  friend GroupElement operator/(const GroupElement& x, const Rational& q);

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);
  friend std::strong_ordering compare(const GroupElement& x, const GroupElement& y);

  // "a" or "a+b*sqrtD" with rationals written "p/q".
  std::string to_string() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  std::int64_t d_ = 0;
};

// Strict weak ordering for ordered containers keyed by group elements.
struct GroupLess {
  bool operator()(const GroupElement& x, const GroupElement& y) const;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement min(const GroupElement& x, const GroupElement& y);
GroupElement max(const GroupElement& x, const GroupElement& y);
// Exact sign of x - y; never uses floating point.
std::strong_ordering compare(const GroupElement& x, const GroupElement& y);
GroupElement scale(const GroupElement& x, const Rational& q);
bool in_group(const GroupElement& x, const Lattice& lattice);

// Throws DescriptorMismatch when x and y use different radicands.
std::int64_t common_radicand(const GroupElement& x, const GroupElement& y);

// A lattice element in the open interval (lo, hi) of smallest "height"
// (|n| for m + n*sqrt d, denominator for rationals); nullopt if none exists.
// Either bound may be absent, meaning -inf / +inf.
std::optional<GroupElement> simple_lattice_point(const std::optional<GroupElement>& lo,
                                                 const std::optional<GroupElement>& hi,
                                                 const Lattice& lattice);

// 0 < result < bound, result in the lattice. Requires a dense lattice.
GroupElement small_positive_element(const Lattice& lattice, const GroupElement& bound);

}  // namespace intr
