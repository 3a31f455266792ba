#include "intr/gadgets_intr.hpp"

#include <algorithm>
#include <set>

namespace intr {

namespace {

FieldElement t_pow(CoefficientField field, const GroupElement& e) { return FieldElement::t(field, e); }

FieldElement constant(CoefficientField field, const Rational& c) { return FieldElement::constant(field, c); }

std::optional<GroupElement> add_opt(const std::optional<GroupElement>& a, const std::optional<GroupElement>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

ValueRange add_ranges(const ValueRange& a, const ValueRange& b) { return {add_opt(a.lo, b.lo), add_opt(a.hi, b.hi)}; }

ValueRange negate(const ValueRange& a) {
  ValueRange r;
  if (a.hi) r.lo = -*a.hi;
  if (a.lo) r.hi = -*a.lo;
  return r;
}

bool has_breakpoint(const PiecewiseLinear& f, const GroupElement& x) {
  const auto& b = f.breakpoints();
  return std::find(b.begin(), b.end(), x) != b.end();
}

// Drops overrides that agree with the generic value.
void tidy(ValueProfile& p) {
  std::vector<ProfileOverride> kept;
  for (auto& o : p.overrides) {
    if (o.range.is_point() && *o.range.lo == p.generic.evaluate(o.at)) continue;
    kept.push_back(o);
  }
  std::sort(kept.begin(), kept.end(),
            [](const ProfileOverride& a, const ProfileOverride& b) { return compare(a.at, b.at) < 0; });
  p.overrides = std::move(kept);
}

ValueProfile combine(const ValueProfile& f, const ValueProfile& g, bool subtract) {
  ValueProfile out;
  out.lattice = f.lattice;
  out.generic = subtract ? f.generic - g.generic : f.generic + g.generic;
  std::set<GroupElement, GroupLess> at;
  for (const auto& o : f.overrides) at.insert(o.at);
  for (const auto& o : g.overrides) at.insert(o.at);
  for (const auto& x : at) {
    ValueRange b = g.at(x);
    out.overrides.push_back({x, add_ranges(f.at(x), subtract ? negate(b) : b)});
  }
  tidy(out);
  return out;
}

// Profile of f from its minimum-valuation functions. At lattice points where
// several lines meet in the numerator (resp. denominator) envelope the value
// can only rise (resp. fall).
ValueProfile profile_of(const RationalFunction& f, const Lattice& lattice) {
  ValueProfile p;
  p.lattice = lattice;
  const PiecewiseLinear num = f.num().minval();
  const PiecewiseLinear den = f.den().minval();
  p.generic = num - den;
  for (const GroupElement& x : exceptional_abscissas(f)) {
    if (!in_group(x, lattice)) continue;
    const GroupElement g = p.generic.evaluate(x);
    ValueRange r{g, g};
    if (has_breakpoint(num, x)) r.hi.reset();
    if (has_breakpoint(den, x)) r.lo.reset();
    p.overrides.push_back({x, r});
  }
  tidy(p);
  return p;
}

void refresh_alpha(IntRElement& e) {
  Extremum inf = e.profile.infimum();
  e.alpha = inf.value;
  e.alpha_attained = inf.attained;
}

Rational constant_coefficient(const FieldElement& c) {
  if (c.num().size() > 1 || c.den().size() > 1 || (!c.is_zero() && !c.num().min_exponent().is_zero()) ||
      !c.den().min_exponent().is_zero()) {
    throw PreconditionError("residue test needs coefficients in k");
  }
  if (c.is_zero()) return 0;
  return c.field().reduce(c.num().lowest_coefficient() / c.den().lowest_coefficient());
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > 1000000) throw PreconditionError("rational root search: coefficient too large");
  std::vector<Integer> out;
  for (long d = 1; d <= n.get_si(); ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

bool ValueRange::contains(const GroupElement& x) const {
  return (!lo || compare(*lo, x) <= 0) && (!hi || compare(x, *hi) <= 0);
}

std::string ValueRange::to_string() const {
  if (is_point()) return lo->to_string();
  return std::string(lo ? "[" + lo->to_string() : "(-inf") + "," + (hi ? hi->to_string() + "]" : "inf)");
}

ValueProfile ValueProfile::constant(const GroupElement& c, const Lattice& lattice) {
  ValueProfile p;
  p.generic = PiecewiseLinear::constant(c);
  p.lattice = lattice;
  return p;
}

ValueRange ValueProfile::at(const GroupElement& gamma) const {
  for (const auto& o : overrides) {
    if (o.at == gamma) return o.range;
  }
  const GroupElement g = generic.evaluate(gamma);
  return {g, g};
}

bool ValueProfile::exact() const {
  return std::all_of(overrides.begin(), overrides.end(), [](const ProfileOverride& o) { return o.range.is_point(); });
}

std::optional<GroupElement> ValueProfile::at_zero() const {
  const LinePiece& last = generic.pieces().back();
  if (last.slope != 0) return std::nullopt;
  return last.intercept;
}

ValueProfile operator+(const ValueProfile& f, const ValueProfile& g) { return combine(f, g, false); }
ValueProfile operator-(const ValueProfile& f, const ValueProfile& g) { return combine(f, g, true); }

ValueProfile ValueProfile::scaled(long k) const {
  if (k == 0) return constant(0, lattice);
  ValueProfile p;
  p.lattice = lattice;
  p.generic = generic.scaled(k);
  for (const auto& o : overrides) {
    ValueRange r;
    if (o.range.lo) r.lo = *o.range.lo * Rational(k);
    if (o.range.hi) r.hi = *o.range.hi * Rational(k);
    if (k < 0) std::swap(r.lo, r.hi);
    p.overrides.push_back({o.at, r});
  }
  return p;
}

ValueProfile ValueProfile::shifted(const GroupElement& s) const {
  ValueProfile p;
  p.lattice = lattice;
  p.generic = generic.shifted(s);
  for (const auto& o : overrides) p.overrides.push_back({o.at + s, o.range});
  return p;
}

Extremum ValueProfile::infimum() const {
  Extremum e = infimum_over(generic, lattice);
  for (const auto& o : overrides) {
    if (!o.range.lo) return Extremum{};
    if (e.value && compare(*o.range.lo, *e.value) < 0) {
      e = Extremum{o.range.lo, o.range.is_point(), o.at};
    }
  }
  return e;
}

Extremum ValueProfile::supremum() const {
  Extremum e = supremum_over(generic, lattice);
  for (const auto& o : overrides) {
    if (!o.range.hi) return Extremum{};
    if (e.value && compare(*o.range.hi, *e.value) > 0) {
      e = Extremum{o.range.hi, o.range.is_point(), o.at};
    }
  }
  return e;
}

std::string ValueProfile::to_string() const {
  std::string s = generic.to_string();
  for (const auto& o : overrides) s += "; at " + o.at.to_string() + ": " + o.range.to_string();
  return s;
}

std::string to_string(Membership m) { return m == Membership::Certified ? "certified" : "not-certified"; }

bool has_root_in_residue_field(const XPoly& f, CoefficientField field) {
  std::vector<Rational> c;
  for (const auto& a : f.coeffs()) c.push_back(constant_coefficient(a));
  if (c.empty()) return true;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.reduce(acc * x + *it);
    return acc;
  };
  if (field.finite()) {
    for (long r = 0; r < field.p; ++r) {
      if (eval(r) == 0) return true;
    }
    return false;
  }
  if (c.front() == 0) return true;
  Integer l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  const Integer a0 = Rational(c.front() * l).get_num();
  const Integer an = Rational(c.back() * l).get_num();
  for (const Integer& p : divisors(a0)) {
    for (const Integer& q : divisors(an)) {
      const Rational x = Rational(p) / Rational(q);
      if (eval(x) == 0 || eval(-x) == 0) return true;
    }
  }
  return false;
}

XPoly default_unit_valued_poly(CoefficientField field) {
  auto k = [&](long c) { return constant(field, c); };
  XPoly f;
  if (!field.finite()) {
    f = XPoly({k(1), k(0), k(1)});
  } else if (field.p == 2) {
    f = XPoly({k(1), k(1), k(1)});
  } else {
    std::vector<FieldElement> cs(field.p + 1, k(0));
    cs[0] = k(1);
    cs[1] = k(-1);
    cs[field.p] = k(1);
    f = XPoly(cs);
  }
  if (has_root_in_residue_field(f, field)) throw PreconditionError("default polynomial has a residue root");
  return f;
}

IntRElement gadget_stone_weierstrass(const FieldElement& b, const GroupElement& tau, const Lattice& lattice) {
  if (tau.sign() <= 0) throw PreconditionError("tau must be positive");
  if (!in_group(tau, lattice)) throw PreconditionError("tau must lie in Gamma");
  if (b.is_zero()) throw PreconditionError("b must be nonzero");
  const CoefficientField field = b.field();
  const XPoly x3 = XPoly::x(field).pow(3);
  const FieldElement b3 = b.pow(3);
  const XPoly num = x3 + XPoly::constant(b3 * t_pow(field, tau * Rational(2)));
  const XPoly den = x3 + XPoly::constant(b3 * t_pow(field, tau));
  IntRElement e;
  e.func = RationalFunction(num, den);
  e.profile = profile_of(e.func, lattice);
  e.kind = "stone-weierstrass";
  e.params = {{"b", b.to_string()}, {"tau", tau.to_string()}};
  refresh_alpha(e);
  e.membership = certify_in_intr_V(e) ? Membership::Certified : Membership::NotCertified;
  e.note = e.membership == Membership::Certified ? "values in [0, tau]" : "a pole is possible at v(a) = v(b) + tau/3";
  return e;
}

GroupElement zigzag_plateau(const GroupElement& alpha, const GroupElement& alpha_prime, const GroupElement& eps,
                            const Lattice& lattice) {
  if (eps.sign() <= 0) throw PreconditionError("eps must be positive");
  const GroupElement lo = (max(alpha_prime - eps, alpha) - alpha) / Rational(2);
  const GroupElement hi = (alpha_prime - alpha) / Rational(2);
  std::optional<GroupElement> best = simple_lattice_point(lo, hi, lattice);
  if (in_group(hi, lattice)) {
    // hi itself is admissible; prefer it unless the interior point is simpler.
    const auto height = [](const GroupElement& g) {
      return g.is_rational() ? Rational(g.rational_part().get_den()) : Rational(abs(g.sqrt_part()));
    };
    if (!best || height(hi) <= height(*best)) best = hi;
  }
  if (!best) throw PreconditionError("no admissible plateau value in (" + lo.to_string() + ", " + hi.to_string() + "]");
  return alpha + *best * Rational(2);
}

IntRElement gadget_zigzag(const ZigZagParams& p, const GadgetContext& ctx) {
  const Lattice& lattice = ctx.lattice();
  const CoefficientField field = ctx.field;
  if (!in_group(p.alpha, lattice)) throw PreconditionError("alpha must lie in Gamma");
  if (p.alpha.sign() < 0) throw PreconditionError("alpha must be nonnegative");
  if (compare(p.alpha, p.alpha_prime) >= 0) throw PreconditionError("need alpha < alpha'");
  ZigZagCase which = p.which;
  if (which == ZigZagCase::Auto) which = lattice.divisible() ? ZigZagCase::UnitPolynomial : ZigZagCase::PthPower;

  IntRElement e;
  e.kind = "zigzag";
  if (which == ZigZagCase::UnitPolynomial) {
    if (!lattice.divisible()) throw PreconditionError("the unit-polynomial zig-zag needs a divisible group");
    const XPoly f = default_unit_valued_poly(field);
    const long n = f.degree();
    const GroupElement w = (p.alpha_prime - p.alpha) / Rational(n);
    // b c^n f(x/c) / f(x) with v(b) = alpha, v(c) = w.
    std::vector<FieldElement> cs;
    for (long i = 0; i <= n; ++i) {
      cs.push_back(f.coeffs()[i] * t_pow(field, p.alpha + w * Rational(n - i)));
    }
    e.func = RationalFunction(XPoly(cs), f);
    e.profile.lattice = lattice;
    e.profile.generic = PiecewiseLinear({0, w}, {{0, p.alpha}, {n, p.alpha}, {0, p.alpha_prime}});
    e.params = {{"case", "unit-polynomial"},
                {"f", f.to_string()},
                {"alpha", p.alpha.to_string()},
                {"alpha'", p.alpha_prime.to_string()},
                {"alpha''", p.alpha_prime.to_string()}};
    e.note = "f has no root in the residue field";
  } else {
    if (!lattice.dense() || lattice.divisible()) {
      throw PreconditionError("the p-th power zig-zag needs a dense, non-divisible group");
    }
    const GroupElement a2 = zigzag_plateau(p.alpha, p.alpha_prime, p.eps, lattice);
    const GroupElement mu(1);
    if (in_group(mu / Rational(2), lattice) || in_group((mu + a2 - p.alpha) / Rational(2), lattice)) {
      throw PreconditionError("breakpoints of the p-th power zig-zag must avoid Gamma");
    }
    const XPoly x2 = XPoly::x(field).pow(2);
    const FieldElement b = t_pow(field, p.alpha);
    const FieldElement cc = t_pow(field, a2 - p.alpha);
    const FieldElement c1 = t_pow(field, mu);
    e.func = RationalFunction(x2.scaled(b) + XPoly::constant(b * cc * c1), x2 + XPoly::constant(c1));
    e.profile = profile_of(e.func, lattice);
    e.params = {{"case", "pth-power"},       {"p", "2"},
                {"mu", mu.to_string()},      {"alpha", p.alpha.to_string()},
                {"alpha'", p.alpha_prime.to_string()}, {"eps", p.eps.to_string()},
                {"alpha''", a2.to_string()}};
    e.note = "breakpoints 1/2 and (1+alpha''-alpha)/2 are outside Gamma";
  }
  refresh_alpha(e);
  const std::string construction = e.note;
  certify_in_intr_D(e, ctx);
  e.note = construction + "; " + e.note;
  return e;
}

IntRElement gadget_psi_s(const FieldElement& s, const FieldElement& c, const FieldElement& t) {
  const CoefficientField field = s.field();
  const XPoly y3 = XPoly::x(field).pow(3);
  const FieldElement c3 = c.pow(3);
  RationalFunction r(y3 + XPoly::constant(c3 * t.pow(2)), y3 + XPoly::constant(c3 * t));
  IntRElement e;
  e.profile.generic = minval_of(r);
  e.profile.lattice = Lattice::integers();
  e.func = r.compose(XPoly::linear(s));
  e.kind = "psi_s";
  e.params = {{"s", s.to_string()}, {"c", c.to_string()}, {"t", t.to_string()}};
  e.note = "profile in v(x - s)";
  refresh_alpha(e);
  return e;
}

IntRElement compose_scale(const IntRElement& phi, const GroupElement& s, const GadgetContext& ctx) {
  IntRElement e = phi;
  e.func = phi.func.compose(XPoly({constant(ctx.field, 0), t_pow(ctx.field, -s)}));
  e.profile = phi.profile.shifted(s);
  e.params.push_back({"scale", "x/t^" + exponent_to_string(s)});
  refresh_alpha(e);
  certify_in_intr_D(e, ctx);
  return e;
}

IntRElement make_constant(const FieldElement& d, const GadgetContext& ctx) {
  if (d.is_zero()) throw PreconditionError("zero is not a factorization target");
  IntRElement e;
  e.func = RationalFunction(d);
  e.profile = ValueProfile::constant(valuation(d), ctx.lattice());
  e.kind = "constant";
  e.params = {{"d", d.to_string()}};
  refresh_alpha(e);
  certify_in_intr_D(e, ctx);
  return e;
}

IntRElement multiply(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx) {
  IntRElement e;
  e.func = f.func * g.func;
  e.profile = f.profile + g.profile;
  e.kind = "product";
  refresh_alpha(e);
  certify_in_intr_D(e, ctx);
  return e;
}

IntRElement divide(const IntRElement& f, const IntRElement& g, const GadgetContext& ctx) {
  IntRElement e;
  e.func = f.func / g.func;
  e.profile = f.profile - g.profile;
  e.kind = "quotient";
  refresh_alpha(e);
  certify_in_intr_D(e, ctx);
  return e;
}

bool certify_in_intr_V(const IntRElement& phi) {
  const Extremum inf = phi.profile.infimum();
  return inf.value && inf.value->sign() >= 0;
}

bool is_unit_intr_V(const IntRElement& phi) {
  if (!phi.profile.generic.is_zero()) return false;
  return std::all_of(phi.profile.overrides.begin(), phi.profile.overrides.end(),
                     [](const ProfileOverride& o) { return o.range.is_point() && o.range.lo->is_zero(); });
}

void certify_in_intr_D(IntRElement& phi, const GadgetContext& ctx) {
  if (phi.is_constant()) {
    const DCertificate cert = normalize_to_D(phi.func.constant_value(), ctx.spec);
    phi.membership = cert.in_D ? Membership::Certified : Membership::NotCertified;
    phi.note = cert.reason;
    return;
  }
  const Extremum inf = phi.profile.infimum();
  if (!inf.value) {
    phi.membership = Membership::NotCertified;
    phi.note = "values are unbounded below";
    return;
  }
  const GroupElement flat = flat_zone_bound(ctx.spec);
  if (!phi.profile.is_constant() && inf.value->sign() > 0 && compare(*inf.value, flat) < 0) {
    phi.membership = Membership::NotCertified;
    phi.note = "flat-zone rule: a non-constant element cannot take values in (0, " + flat.to_string() + ")";
    return;
  }
  const auto delta = find_integrally_terminal(ctx.spec);
  if (!delta) {
    phi.membership = Membership::NotCertified;
    phi.note = "monoid has no integral terminality bound";
    return;
  }
  const auto c = compare(*inf.value, *delta);
  if (c > 0 || (c == 0 && ctx.spec.contains(*delta))) {
    phi.membership = Membership::Certified;
    phi.note = "all values are at least " + inf.value->to_string() + ", above the terminal bound " +
               delta->to_string();
  } else {
    phi.membership = Membership::NotCertified;
    phi.note = "infimum " + inf.value->to_string() + " is not above the terminal bound " + delta->to_string();
  }
}

Verdict atom_rule(const IntRElement& phi, const GadgetContext& ctx, std::string* reason) {
  auto say = [&](Verdict v, const std::string& why) {
    if (reason) *reason = why;
    return v;
  };
  if (phi.is_constant()) {
    const FieldElement d = phi.func.constant_value();
    if (valuation(d).is_zero()) return say(Verdict::No, "unit");
    const AtomDecision a = is_atom_of_D(d, ctx.spec);
    if (a.verdict == Verdict::Yes) return say(Verdict::Yes, "value " + valuation(d).to_string() + " is an atom of M");
    if (a.verdict == Verdict::No) return say(Verdict::No, "splits in D");
    return say(Verdict::Unknown, "no certified split in D");
  }
  if (is_unit_intr_V(phi)) return say(Verdict::No, "unit");
  if (!phi.profile.exact()) return say(Verdict::Unknown, "profile is not exact on Gamma");
  const Extremum inf = phi.profile.infimum();
  if (!inf.value) return say(Verdict::Unknown, "profile unbounded below");
  const IntervalSet atoms = monoid_atoms(ctx.spec);

  // Values attained on Gamma: flat pieces, breakpoints in Gamma, the infimum.
  std::vector<GroupElement> attained;
  if (inf.attained) attained.push_back(*inf.value);
  const auto& bps = phi.profile.generic.breakpoints();
  const auto& pieces = phi.profile.generic.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].slope != 0) continue;
    Interval dom;
    if (i > 0) dom.lo = bps[i - 1];
    if (i < bps.size()) {
      dom.hi = bps[i];
      dom.hi_closed = true;
    }
    if (contains_lattice_point(dom, ctx.lattice())) attained.push_back(pieces[i].intercept);
  }
  for (const auto& b : bps) {
    if (in_group(b, ctx.lattice())) attained.push_back(phi.profile.generic.evaluate(b));
  }
  for (const auto& w : attained) {
    if (atoms.contains(w)) return say(Verdict::Yes, "attains the atom value " + w.to_string());
  }
  if (!phi.profile.is_constant()) {
    const GroupElement flat = flat_zone_bound(ctx.spec);
    const IntervalSet high({Interval::at_least(flat)});
    for (const auto& w : attained) {
      const IntervalSet pos = ctx.spec.positive_part();
      const IntervalSet splits = pos.intersect(pos.reflect(w));
      if (splits.intersect(high).lattice_empty(ctx.lattice()) && ctx.spec.contains(w) && w.sign() > 0) {
        return say(Verdict::Yes, "every split of the attained value " + w.to_string() + " lies in the flat zone");
      }
    }
  }
  if (ctx.spec.positive_part() == IntervalSet({Interval::at_least(1)}) && compare(*inf.value, GroupElement(2)) >= 0) {
    return say(Verdict::No, "infimum " + inf.value->to_string() + " is at least 2");
  }
  return say(Verdict::Unknown, "no atom certificate");
}

AntimatterWitness antimatter_witness(const IntRElement& phi, int branch, const GadgetContext& ctx) {
  if (!certify_in_intr_V(phi)) throw PreconditionError("phi is not certified in IntR(K,V)");
  if (is_unit_intr_V(phi)) throw PreconditionError("phi is a unit");
  if (!phi.profile.exact()) throw PreconditionError("phi needs an exact profile");
  const auto w = phi.profile.at_zero();
  if (!w || w->sign() <= 0) throw PreconditionError("phi(0) must lie in the maximal ideal");
  const Lattice& lattice = ctx.lattice();
  GroupElement delta(0);
  const auto& bps = phi.profile.generic.breakpoints();
  if (!bps.empty()) delta = max(delta, GroupElement(Rational(bps.back().ceil())));

  AntimatterWitness out;
  out.delta = delta;
  const GroupElement half = *w / Rational(2);
  switch (branch) {
    case 1: {
      if (!lattice.divisible()) throw PreconditionError("branch 1 needs a divisible group");
      const IntRElement z = gadget_zigzag({0, half, half, ZigZagCase::UnitPolynomial}, ctx);
      out.psi = compose_scale(z, delta, ctx);
      break;
    }
    case 2: {
      if (!lattice.dense() || lattice.divisible()) throw PreconditionError("branch 2 needs a dense non-divisible group");
      const GroupElement eps = small_positive_element(lattice, half);
      const IntRElement z = gadget_zigzag({0, half, eps, ZigZagCase::PthPower}, ctx);
      out.psi = compose_scale(z, delta, ctx);
      break;
    }
    case 3: {
      if (lattice.kind() != Lattice::Kind::Integers) throw PreconditionError("branch 3 needs a principal maximal ideal");
      out.psi = gadget_stone_weierstrass(t_pow(ctx.field, delta + GroupElement(1)), 1, lattice);
      break;
    }
    default:
      throw PreconditionError("branch must be 1, 2 or 3");
  }
  out.quotient = divide(phi, out.psi, ctx);
  out.psi_member = certify_in_intr_V(out.psi);
  out.psi_nonunit = !is_unit_intr_V(out.psi);
  out.quotient_member = certify_in_intr_V(out.quotient);
  out.quotient_nonunit = !is_unit_intr_V(out.quotient);
  return out;
}

HypothesisReport check_atomic_hypotheses(const MonoidSpec& spec, CoefficientField field) {
  HypothesisReport r;
  auto add = [&](std::string name, bool ok, std::string detail, bool required = true) {
    r.checks.push_back({std::move(name), ok, required, std::move(detail)});
  };
  bool shape_ok = true;
  try {
    spec.validate_shape();
    add("shape", true, spec.to_string());
  } catch (const Error& e) {
    shape_ok = false;
    add("shape", false, e.what());
  }
  if (shape_ok) {
    const ClosureReport closure = check_monoid(spec);
    std::string detail = "closed under addition";
    if (!closure.closed_under_addition && closure.witness) {
      detail = closure.witness->first.to_string() + " + " + closure.witness->second.to_string() + " is missing";
    }
    add("monoid", closure.closed_under_addition, detail);
    const auto away = is_bounded_away_from_zero(spec);
    add("bounded away from 0", away.has_value(),
        away ? "M_{>0} >= " + away->bound.to_string() : "M_{>0} accumulates at 0");
    add("bounded factorization", away.has_value(),
        away ? "lengths of x are at most v(x) / " + away->group_bound.to_string() : "no length bound");
    r.terminal = find_integrally_terminal(spec);
    add("integrally terminal", r.terminal.has_value(),
        r.terminal ? "values above " + r.terminal->to_string() + " lie in M" : "no terminal bound", false);
  }
  const bool dense = has_no_minimal_positive(spec.group);
  add("no minimal positive", dense,
      dense ? spec.group.to_string() + " is dense" : spec.group.to_string() + " has a minimal positive element");
  add("residue field", true, field.to_string(), false);
  r.local_and_atomic = std::all_of(r.checks.begin(), r.checks.end(),
                                   [](const HypothesisCheck& c) { return !c.required || c.passed; });
  r.certificate = r.local_and_atomic ? "IntR(K,D) is local and atomic" : "hypotheses fail";
  return r;
}

}  // namespace intr
