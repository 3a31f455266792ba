#pragma once

// Integer-valued rational functions with exact value profiles: the cubic
// separating quotient, the two zig-zag constructions, the point gadget psi_s,
// membership and atom certification in IntR(K,V) and IntR(K,D), strict
// divisor witnesses and the atomicity hypothesis report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intr/d_factorization.hpp"
#include "intr/rational_function.hpp"
#include "intr/tropical_minval.hpp"

namespace intr {

// Value range at one abscissa; nullopt bounds mean -inf / +inf.
struct ValueRange {
  std::optional<GroupElement> lo;
  std::optional<GroupElement> hi;

  bool is_point() const { return lo && hi && *lo == *hi; }
  bool contains(const GroupElement& x) const;
  std::string to_string() const;
};

struct ProfileOverride {
  GroupElement at;
  ValueRange range;
};

// gamma -> v(phi(a)) for v(a) = gamma in Gamma. The generic function applies
// except at override abscissas.
struct ValueProfile {
  PiecewiseLinear generic;
  std::vector<ProfileOverride> overrides;
  Lattice lattice = Lattice::rationals();

  static ValueProfile constant(const GroupElement& c, const Lattice& lattice);

  ValueRange at(const GroupElement& gamma) const;
  // Every value on Gamma is determined by v(a) alone.
  bool exact() const;
  // Value at v(a) = +inf, i.e. at a = 0; requires a flat last piece.
  std::optional<GroupElement> at_zero() const;
  // Profile of the product / quotient.
  friend ValueProfile operator+(const ValueProfile& f, const ValueProfile& g);
  friend ValueProfile operator-(const ValueProfile& f, const ValueProfile& g);
  ValueProfile scaled(long k) const;
  // Profile of x -> phi(x / r) with v(r) = s.
  ValueProfile shifted(const GroupElement& s) const;
  bool is_constant() const { return overrides.empty() && generic.is_constant(); }

  // Infimum over Gamma; nullopt when unbounded below.
  Extremum infimum() const;
  Extremum supremum() const;

  std::string to_string() const;
};

struct GadgetParam {
  std::string name;
  std::string value;
};

enum class Membership { Certified, NotCertified };
std::string to_string(Membership m);

struct IntRElement {
  RationalFunction func;
  ValueProfile profile;
  Membership membership = Membership::NotCertified;
  std::optional<GroupElement> alpha;  // infimum of the profile
  bool alpha_attained = false;
  std::string kind;  // "constant", "zigzag", "stone-weierstrass", "psi_s", "product", ...
  std::vector<GadgetParam> params;
  std::string note;  // why membership is or is not certified

  bool is_constant() const { return func.is_constant(); }
};

// Field, group and monoid of a computation. The monoid is only consulted for
// IntR(K,D) questions.
struct GadgetContext {
  MonoidSpec spec = MonoidSpec::one_gap();
  CoefficientField field = CoefficientField::rationals();

  const Lattice& lattice() const { return spec.group; }
};

// Residue test for a monic unit-valued polynomial; throws on failure.
XPoly default_unit_valued_poly(CoefficientField field);
bool has_root_in_residue_field(const XPoly& f, CoefficientField field);

// (x^3 + b^3 t^2) / (x^3 + b^3 t) with t = t^tau.
IntRElement gadget_stone_weierstrass(const FieldElement& b, const GroupElement& tau, const Lattice& lattice);

enum class ZigZagCase { Auto, UnitPolynomial, PthPower };

struct ZigZagParams {
  GroupElement alpha;
  GroupElement alpha_prime;  // may lie in QGamma
  GroupElement eps;          // used by the p-th power construction
  ZigZagCase which = ZigZagCase::Auto;
};

// Value alpha for v(a) small, alpha'' in (alpha' - eps, alpha'] for v(a)
// large, monotone in between. The unit-polynomial construction needs a
// divisible group and gives alpha'' = alpha'; the p-th power one (p = 2,
// mu = 1) needs a dense non-divisible group.
IntRElement gadget_zigzag(const ZigZagParams& p, const GadgetContext& ctx);

// The alpha'' chosen by the p-th power construction.
GroupElement zigzag_plateau(const GroupElement& alpha, const GroupElement& alpha_prime, const GroupElement& eps,
                            const Lattice& lattice);

// ((x-s)^3 + c^3 t^2) / ((x-s)^3 + c^3 t); the profile is only meaningful on
// a finite set of points, so it is left generic in v(x-s).
IntRElement gadget_psi_s(const FieldElement& s, const FieldElement& c, const FieldElement& t);

// phi(x / r) for r = t^s.
IntRElement compose_scale(const IntRElement& phi, const GroupElement& s, const GadgetContext& ctx);

IntRElement make_constant(const FieldElement& d, const GadgetContext& ctx);
// Product and quotient with exact profile arithmetic.
IntRElement multiply(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx);
IntRElement divide(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx);

// Membership in IntR(K,V): every value on Gamma is >= 0.
bool certify_in_intr_V(const IntRElement& phi);
// Membership in IntR(K,D): sets membership/note. Rejects non-constant
// profiles that take a value in the flat zone (0, flat_zone_bound).
void certify_in_intr_D(IntRElement& phi, const GadgetContext& ctx);
// Unit of IntR(K,V): all values 0.
bool is_unit_intr_V(const IntRElement& phi);

// Atom rule without constructing splits: Yes when some attained value is
// an atom value of M, or when the profile is not constant and every split of
// an attained value falls into the flat zone. No for units and for constants
// that split in D. Unknown otherwise.
Verdict atom_rule(const IntRElement& phi, const GadgetContext& ctx, std::string* reason = nullptr);

// Strict divisor witness psi of phi in IntR(K,V).
struct AntimatterWitness {
  IntRElement psi;
  IntRElement quotient;
  GroupElement delta;  // v(a) >= delta gives v(phi(a)) = v(phi(0))
  bool psi_member = false, psi_nonunit = false, quotient_member = false, quotient_nonunit = false;

  bool ok() const { return psi_member && psi_nonunit && quotient_member && quotient_nonunit; }
};
AntimatterWitness antimatter_witness(const IntRElement& phi, int branch, const GadgetContext& ctx);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  bool required = true;  // informational checks do not affect the verdict
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;
  bool local_and_atomic = false;
  std::string certificate;
  std::optional<GroupElement> terminal;  // integral terminality bound when present
};

HypothesisReport check_atomic_hypotheses(const MonoidSpec& spec, CoefficientField field);

}  // namespace intr
