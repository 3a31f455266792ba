#pragma once

// Integer-valued rational functions on a finite subset E of k(u) over the
// discrete valuation ring V = k[u]_(u): value vectors, the atoms psi_s and
// unique factorization.

#include <optional>
#include <string>
#include <vector>

#include "intr/gadgets_intr.hpp"

namespace intr {

struct DvrContext {
  CoefficientField field;
  std::vector<FieldElement> points;      // E, pairwise distinct
  std::vector<FieldElement> separators;  // c_s per point

  std::size_t size() const { return points.size(); }
  FieldElement u() const { return FieldElement::t(field, 1); }
};

// Validates the points (integer exponents, pairwise distinct) and fills in
// c_s = u^m with m = max v(b - s) over the other points. Explicit
// separators are checked: no point may be closer to s than c_s.
DvrContext make_dvr_context(CoefficientField field, std::vector<FieldElement> points,
                            std::vector<FieldElement> separators = {});

// ((x-s)^3 + c_s^3 u^2) / ((x-s)^3 + c_s^3 u) for the i-th point.
RationalFunction psi(const DvrContext& ctx, std::size_t i);

// u-adic orders of phi at the points. Throws PreconditionError when phi is
// undefined or zero at some point.
std::vector<long> value_vector(const RationalFunction& phi, const DvrContext& ctx);

bool is_member(const RationalFunction& phi, const DvrContext& ctx);
// All values 0.
bool is_unit(const RationalFunction& phi, const DvrContext& ctx);

struct DvrFactorization {
  std::vector<long> exponents;
  RationalFunction unit;

  // unit * prod psi_i^e_i
  RationalFunction product(const DvrContext& ctx) const;
};

DvrFactorization factor_into_atoms(const RationalFunction& phi, const DvrContext& ctx);

// E described either as a finite list or as {a + b u^n : n >= 1} (optionally
// truncated at n <= N and optionally containing the limit a).
struct PointFamily {
  std::vector<FieldElement> finite;
  std::optional<FieldElement> limit;
  std::optional<FieldElement> step;
  std::optional<long> truncate;
  bool contains_limit = false;

  static PointFamily of(std::vector<FieldElement> points);
  static PointFamily geometric(const FieldElement& a, const FieldElement& b, std::optional<long> n = std::nullopt,
                               bool contains_limit = false);
  bool is_finite() const { return !step || truncate.has_value(); }
  // The finite point list; throws for infinite families.
  std::vector<FieldElement> points() const;
};

struct AtomicityReport {
  bool atomic = false;
  std::optional<FieldElement> witness;  // accumulation point
  std::string explanation;
};

AtomicityReport antimatter_flag(const PointFamily& family, CoefficientField field);

}  // namespace intr
