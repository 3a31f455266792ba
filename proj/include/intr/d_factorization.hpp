#pragma once

// Factorizations of elements of D = k[t;M]_(t;M) for gap monoids: atom
// decisions, explicit factorizations of prescribed length, the distance
// between factorizations and the 3-chain procedure for {0} u [1,inf).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intr/monoid_algebra.hpp"

namespace intr {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct AtomDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::pair<FieldElement, FieldElement>> split;  // for No with a nonunit split
};

// x must be certified in D. Yes iff v(x) lies in the atom region of M.
AtomDecision is_atom_of_D(const FieldElement& x, const MonoidSpec& spec);

// Yes/No/Unknown association of x and y in D. No is certified either by
// v(x/y) != 0 or by v(x/y - c) not in M for the constant term c of x/y.
Verdict associate_in_D(const FieldElement& x, const FieldElement& y, const MonoidSpec& spec);

struct DFactorization {
  std::vector<FieldElement> factors;
  std::vector<Verdict> atom_flags;
  GroupElement value;

  FieldElement product() const;
  std::string to_string() const;
};

// Builds a factorization from explicit factors, computing flags and value.
DFactorization make_d_factorization(std::vector<FieldElement> factors, const MonoidSpec& spec);

// l-1 copies of t^g and the cofactor x / t^((l-1)g), with g = v(x)/l when
// that is an atom value of Gamma. Throws PreconditionError when no such
// factorization of length l exists.
DFactorization factor_in_D(const FieldElement& x, const MonoidSpec& spec, long length);

// (t, ..., t, x / t^(floor(v)-1)) for the one-gap monoid.
DFactorization canonical_factorization(const FieldElement& x, const MonoidSpec& spec);

struct Distance {
  long value = 0;
  // False when some factor pair had an Unknown association; value is then
  // an upper bound.
  bool certified = true;
};

// max(|z1 - gcd|, |z2 - gcd|) after grouping factors by association.
Distance distance(const DFactorization& z1, const DFactorization& z2, const MonoidSpec& spec);

// Chain from z to the canonical factorization; consecutive factorizations
// differ by at most 3 for the one-gap monoid.
std::vector<DFactorization> three_chain(const FieldElement& x, const DFactorization& z, const MonoidSpec& spec);

// Chain z1 -> canonical -> z2.
std::vector<DFactorization> connecting_chain(const FieldElement& x, const DFactorization& z1,
                                             const DFactorization& z2, const MonoidSpec& spec);

}  // namespace intr
