#pragma once

// Factorizations in IntR(K,D): length sets, explicit factorizations of a
// prescribed length built from zig-zag functions, the extended length bounds
// for general gap monoids, association, distance and 3-chains.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "intr/gadgets_intr.hpp"

namespace intr {

struct IntRFactorization {
  std::vector<IntRElement> factors;
  std::vector<Verdict> atom_flags;

  std::size_t length() const { return factors.size(); }
  RationalFunction product() const;
  bool all_atoms() const;
  std::string to_string() const;
};

IntRFactorization make_intr_factorization(std::vector<IntRElement> factors, const GadgetContext& ctx);

struct IntRAtomDecision {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<std::pair<IntRElement, IntRElement>> split;  // for No on a nonunit
};

// Atom rule with an explicit two-factor split for non-atoms. Throws
// PreconditionError unless phi is certified in IntR(K,D).
IntRAtomDecision atom_certify_intr(const IntRElement& phi, const GadgetContext& ctx);

// Lengths of factorizations of x in D, found by the constructive search.
std::set<long> length_set_D(const FieldElement& x, const MonoidSpec& spec);

// {2..floor(alpha)} for alpha >= 2 and {1} for 1 <= alpha < 2, alpha the
// infimum of the profile (v(d) for constants). One-gap monoid only.
LengthSet length_set_intr(const IntRElement& phi, const GadgetContext& ctx);

// An explicit factorization of phi into `length` atoms. Lengths of D are
// realized in D; the others use zig-zag factors. Throws PreconditionError
// for lengths outside the set.
IntRFactorization factorization_intr(const IntRElement& phi, long length, const GadgetContext& ctx);

struct LengthBounds {
  std::set<long> d_lengths;  // L_D(d)
  std::set<long> lower;      // L_D(d) u {2..N-2}
  long upper = 0;            // max L_D(d)
  long N = 0;                // min{n : n*alpha > v(d)}
  std::vector<IntRFactorization> witnesses;  // one per length in {2..N-2}
};

// Lower and upper bounds for the lengths of a constant d in IntR(K,D) for a
// gap monoid with terminal value alpha and gap (beta, alpha). Throws
// PreconditionError when v(d) <= 3 alpha or the hypotheses fail.
LengthBounds extend_length_bounds(const FieldElement& d, const GadgetContext& ctx, const GroupElement& alpha,
                                  const GroupElement& beta);

// Association in IntR(K,D). Unknown when the quotient has profile 0 but is
// not certified to be a unit.
Verdict associate_intr(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx);

Distance distance_intr(const IntRFactorization& z1, const IntRFactorization& z2, const GadgetContext& ctx);

// (t, ..., t, d / t^(floor(v)-1)).
IntRFactorization canonical_intr(const FieldElement& d, const GadgetContext& ctx);

// z1 -> canonical -> z2 by the pairwise replacement procedure; consecutive
// distances are at most 3. Throws PreconditionError when v(d) < 3 and the
// factorizations differ.
std::vector<IntRFactorization> chain_intr(const FieldElement& d, const IntRFactorization& z1,
                                          const IntRFactorization& z2, const GadgetContext& ctx);

}  // namespace intr
