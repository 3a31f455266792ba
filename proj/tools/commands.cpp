#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "intr/intr_factorization.hpp"
#include "intr/parse.hpp"
#include "intr/table.hpp"
#include "intr/verify.hpp"

namespace intr::cli {

using nlohmann::json;

namespace {

// Bad arguments detected after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

struct Setup {
  MonoidSpec spec;
  CoefficientField field;
  GadgetContext ctx;
};

Setup setup(const RunConfig& cfg) {
  Setup s;
  s.spec = parse_monoid(cfg.monoid);
  s.field = parse_field(cfg.field);
  s.ctx.spec = s.spec;
  s.ctx.field = s.field;
  return s;
}

// Grid values from..to with step 1/q.
std::vector<GroupElement> grid(const RunConfig& cfg) {
  if (cfg.grid_q < 1) throw UsageError("--grid-q must be at least 1");
  const GroupElement from = parse_group_element(cfg.from), to = parse_group_element(cfg.to);
  const Rational q(cfg.grid_q);
  auto index = [&](const GroupElement& x, const char* name) {
    if (!x.is_rational()) throw UsageError(std::string("--") + name + " must be rational");
    const Rational scaled = x.rational_part() * q;
    if (scaled.get_den() != 1) {
      throw UsageError(std::string("--") + name + " = " + x.to_string() + " is not on the grid (1/" +
                       std::to_string(cfg.grid_q) + ")Z");
    }
    return scaled.get_num().get_si();
  };
  const long a = index(from, "from"), b = index(to, "to");
  if (a <= 0) throw UsageError("--from must be positive");
  if (a > b) throw UsageError("--from exceeds --to");
  std::vector<GroupElement> out;
  for (long k = a; k <= b; ++k) out.push_back(GroupElement(Rational(k) / q));
  return out;
}

template <class F>
std::string or_na(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return "n/a";
  }
}

std::string emit(const RunConfig& cfg, const json& j, const Table& t) {
  return cfg.format == "csv" ? to_csv(t) : j.dump(2) + "\n";
}

json header(const RunConfig& cfg, const std::string& command) {
  return with_schema({{"command", command}, {"monoid", parse_monoid(cfg.monoid).to_string()},
                      {"field", parse_field(cfg.field).to_string()}});
}

int cmd_analyze(const RunConfig& cfg, std::string& out) {
  const Setup s = setup(cfg);
  const HypothesisReport r = check_atomic_hypotheses(s.spec, s.field);
  json j = header(cfg, "analyze");
  j["report"] = to_json(r);
  Table t{"analyze", {"check", "passed", "required", "detail"}, {}};
  for (const auto& c : r.checks) {
    t.add_row({c.name, c.passed ? "true" : "false", c.required ? "true" : "false", c.detail});
  }
  t.add_row({"local and atomic", r.local_and_atomic ? "true" : "false", "true", r.certificate});
  out += emit(cfg, j, t);
  return kOk;
}

int cmd_lengths(const RunConfig& cfg, std::string& out) {
  const Setup s = setup(cfg);
  Table t{"lengths", {"v", "closed_form", "bruteforce", "intr", "agree", "d_in_intr"}, {}};
  bool ok = true;
  for (const GroupElement& v : grid(cfg)) {
    const std::string cf = or_na([&] { return length_set_closed_form(s.spec, v).to_string(); });
    const BruteForceLengths bf = length_set_bruteforce(s.spec, v, cfg.grid_q);
    const std::string brute = bf.cap_exceeded ? "cap" : bf.lengths.to_string();
    std::optional<LengthSet> intr_set;
    try {
      intr_set = length_set_intr(make_constant(FieldElement::t(s.field, v), s.ctx), s.ctx);
    } catch (const Error&) {
    }
    std::string agree = "n/a", contained = "n/a";
    if (cf != "n/a" && !bf.cap_exceeded) agree = cf == brute ? "true" : "false";
    if (intr_set && !bf.cap_exceeded) {
      bool all = true;
      for (long l : bf.lengths.values()) all = all && intr_set->contains(l);
      contained = all ? "true" : "false";
    }
    ok = ok && agree != "false" && contained != "false";
    t.add_row({v.to_string(), cf, brute, intr_set ? intr_set->to_string() : "n/a", agree, contained});
  }
  json j = header(cfg, "lengths");
  j["grid_q"] = cfg.grid_q;
  j["table"] = to_json(t);
  out += emit(cfg, j, t);
  return ok ? kOk : kFailed;
}

int cmd_catenary(const RunConfig& cfg, std::string& out) {
  const Setup s = setup(cfg);
  Table t{"catenary", {"v", "c_D", "d_max_step", "d_chain", "intr_max_step", "intr_chain"}, {}};
  bool ok = true;
  for (const GroupElement& v : grid(cfg)) {
    const FieldElement x = FieldElement::t(s.field, v);
    std::string c_d = or_na([&] { return std::to_string(catenary_closed_form(s.spec, v)); });
    std::string d_step = "n/a", d_chain = "n/a", i_step = "n/a", i_chain = "n/a";
    try {
      const std::set<long> ls = length_set_D(x, s.spec);
      const auto chain = connecting_chain(x, factor_in_D(x, s.spec, *ls.begin()),
                                          factor_in_D(x, s.spec, *ls.rbegin()), s.spec);
      long step = 0;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        step = std::max(step, distance(chain[i], chain[i + 1], s.spec).value);
      }
      d_step = std::to_string(step);
      d_chain = std::to_string(chain.size());
      if (c_d != "n/a" && step > std::stol(c_d) && std::stol(c_d) >= 3) ok = false;
    } catch (const Error&) {
    }
    try {
      const IntRElement d = make_constant(x, s.ctx);
      const LengthSet ls = length_set_intr(d, s.ctx);
      const auto chain =
          chain_intr(x, factorization_intr(d, ls.min, s.ctx), factorization_intr(d, ls.max, s.ctx), s.ctx);
      long step = 0;
      bool certified = true;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Distance dist = distance_intr(chain[i], chain[i + 1], s.ctx);
        step = std::max(step, dist.value);
        certified = certified && dist.certified;
      }
      i_step = std::to_string(step) + (certified ? "" : "?");
      i_chain = std::to_string(chain.size());
      if (step > 3) ok = false;
    } catch (const Error&) {
    }
    t.add_row({v.to_string(), c_d, d_step, d_chain, i_step, i_chain});
  }
  json j = header(cfg, "catenary");
  j["table"] = to_json(t);
  out += emit(cfg, j, t);
  return ok ? kOk : kFailed;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& args, std::size_t first) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = first; i < args.size(); ++i) {
    const auto eq = args[i].find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got \"" + args[i] + "\"");
    kv[args[i].substr(0, eq)] = args[i].substr(eq + 1);
  }
  return kv;
}

int cmd_gadget(const RunConfig& cfg, std::string& out) {
  if (cfg.args.empty()) throw UsageError("gadget needs a kind: sw | zigzag | psi | constant");
  const Setup s = setup(cfg);
  const Lattice& lattice = s.spec.group;
  auto kv = key_values(cfg.args, 1);
  auto take = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto elem = [&](const std::string& key, const std::string& fallback) {
    return parse_field_element(take(key, fallback), s.field, lattice);
  };
  const std::string kind = cfg.args[0];
  const std::string scale = take("scale", "");
  IntRElement e;
  if (kind == "sw" || kind == "stone-weierstrass") {
    const FieldElement b = elem("b", "1");
    e = gadget_stone_weierstrass(b, parse_group_element(take("tau", "1")), lattice);
  } else if (kind == "zigzag") {
    ZigZagParams p;
    p.alpha = parse_group_element(take("alpha", "1"));
    p.alpha_prime = parse_group_element(take("alpha_prime", take("alpha'", "2")));
    p.eps = parse_group_element(take("eps", "1"));
    const std::string c = take("case", "auto");
    if (c == "auto") {
      p.which = ZigZagCase::Auto;
    } else if (c == "unit" || c == "1") {
      p.which = ZigZagCase::UnitPolynomial;
    } else if (c == "pth" || c == "2") {
      p.which = ZigZagCase::PthPower;
    } else {
      throw UsageError("case must be auto, unit or pth");
    }
    e = gadget_zigzag(p, s.ctx);
  } else if (kind == "psi") {
    e = gadget_psi_s(elem("s", "0"), elem("c", "1"), elem("t", "t"));
  } else if (kind == "constant") {
    e = make_constant(elem("d", "t"), s.ctx);
  } else {
    throw UsageError("unknown gadget kind \"" + kind + "\"");
  }
  if (!kv.empty()) throw UsageError("unknown parameter \"" + kv.begin()->first + "\" for " + kind);
  if (!scale.empty()) e = compose_scale(e, parse_group_element(scale), s.ctx);
  json j = header(cfg, "gadget");
  j["gadget"] = to_json(e);
  j["in_intr_V"] = certify_in_intr_V(e);
  Table t{"gadget", {"field", "value"}, {}};
  t.add_row({"kind", e.kind});
  t.add_row({"function", e.func.to_string()});
  t.add_row({"profile", e.profile.to_string()});
  t.add_row({"alpha", e.alpha ? e.alpha->to_string() : "unbounded"});
  t.add_row({"membership", to_string(e.membership)});
  t.add_row({"in_intr_V", certify_in_intr_V(e) ? "true" : "false"});
  t.add_row({"note", e.note});
  for (const auto& p : e.params) t.add_row({"param " + p.name, p.value});
  out += emit(cfg, j, t);
  return kOk;
}

std::string join_factors(const IntRFactorization& z) {
  std::string s;
  for (const auto& f : z.factors) s += (s.empty() ? "" : " * ") + ("(" + f.func.to_string() + ")");
  return s;
}

int cmd_factor(const RunConfig& cfg, std::string& out) {
  if (cfg.args.empty() || cfg.args.size() > 2) throw UsageError("factor takes an element and a length or \"all\"");
  const Setup s = setup(cfg);
  const FieldElement x = parse_field_element(cfg.args[0], s.field, s.spec.group);
  if (x.is_zero()) throw UsageError("cannot factor zero");
  const std::string which = cfg.args.size() == 2 ? cfg.args[1] : "all";
  std::optional<long> only;
  if (which != "all") {
    try {
      std::size_t used = 0;
      only = std::stol(which, &used);
      if (used != which.size() || *only < 1) throw std::invalid_argument(which);
    } catch (const std::logic_error&) {
      throw UsageError("length must be a positive integer or \"all\", got \"" + which + "\"");
    }
  }
  if (!normalize_to_D(x, s.spec).in_D) throw UsageError(x.to_string() + " is not certified in D");
  const IntRElement d = make_constant(x, s.ctx);
  const std::set<long> d_lengths = length_set_D(x, s.spec);
  // IntR lengths are the realizable ones among 1..max, max from D or the value.
  long top = d_lengths.empty() ? 1 : *d_lengths.rbegin();
  top = std::max(top, valuation(x).floor().get_si());
  std::set<long> intr_lengths;
  std::vector<IntRFactorization> intr_z;
  for (long l = 1; l <= top; ++l) {
    try {
      IntRFactorization z = factorization_intr(d, l, s.ctx);
      intr_lengths.insert(l);
      if (!only || *only == l) intr_z.push_back(std::move(z));
    } catch (const PreconditionError&) {
    }
  }
  std::vector<DFactorization> d_z;
  for (long l : d_lengths) {
    if (!only || *only == l) d_z.push_back(factor_in_D(x, s.spec, l));
  }
  if (only && d_z.empty() && intr_z.empty()) {
    throw UsageError("length " + std::to_string(*only) + " is not realizable for " + x.to_string());
  }
  json j = header(cfg, "factor");
  j["element"] = x.to_string();
  j["value"] = valuation(x).to_string();
  j["d_lengths"] = std::vector<long>(d_lengths.begin(), d_lengths.end());
  j["intr_lengths"] = std::vector<long>(intr_lengths.begin(), intr_lengths.end());
  j["d_factorizations"] = json::array();
  j["intr_factorizations"] = json::array();
  Table t{"factor", {"ring", "length", "factors", "all_atoms"}, {}};
  for (const auto& z : d_z) {
    j["d_factorizations"].push_back(to_json(z));
    bool atoms = true;
    for (Verdict v : z.atom_flags) atoms = atoms && v == Verdict::Yes;
    t.add_row({"D", std::to_string(z.factors.size()), z.to_string(), atoms ? "true" : "false"});
  }
  for (const auto& z : intr_z) {
    j["intr_factorizations"].push_back(to_json(z));
    t.add_row({"IntR", std::to_string(z.length()), join_factors(z), z.all_atoms() ? "true" : "false"});
  }
  out += emit(cfg, j, t);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::string& out, std::ostream& err) {
  if (cfg.args.size() > 1) throw UsageError("verify takes at most one suite name");
  const std::vector<int> ids = suite_criteria(cfg.args.empty() ? "all" : cfg.args[0]);
  json j = with_schema({{"command", "verify"}, {"seed", cfg.seed}});
  j["criteria"] = json::array();
  Table t{"verify", {"id", "name", "passed", "cases", "counterexamples"}, {}};
  bool all = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, cfg.seed);
    err << summary_line(r) << "\n";
    for (const auto& c : r.counterexamples) err << "    " << c << "\n";
    all = all && r.passed();
    // Timing stays out of the document so that runs compare equal.
    j["criteria"].push_back({{"id", r.info.id},
                             {"name", r.info.name},
                             {"passed", r.passed()},
                             {"within_limit", r.within_limit()},
                             {"limit_seconds", r.info.limit_seconds},
                             {"cases", r.cases},
                             {"counterexamples", r.counterexamples}});
    std::string ce;
    for (const auto& c : r.counterexamples) ce += (ce.empty() ? "" : "; ") + c;
    t.add_row({std::to_string(r.info.id), r.info.name, r.passed() ? "true" : "false", std::to_string(r.cases), ce});
  }
  j["passed"] = all;
  out += emit(cfg, j, t);
  return all ? kOk : kFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::string& out, std::ostream& err) {
  std::string text;
  int code = kOk;
  try {
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
    if (cfg.subcommand == "analyze") {
      code = cmd_analyze(cfg, text);
    } else if (cfg.subcommand == "lengths") {
      code = cmd_lengths(cfg, text);
    } else if (cfg.subcommand == "catenary") {
      code = cmd_catenary(cfg, text);
    } else if (cfg.subcommand == "gadget") {
      code = cmd_gadget(cfg, text);
    } else if (cfg.subcommand == "factor") {
      code = cmd_factor(cfg, text);
    } else if (cfg.subcommand == "verify") {
      code = cmd_verify(cfg, text, err);
    } else {
      throw UsageError("unknown subcommand \"" + cfg.subcommand + "\"");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.out.empty()) {
    out += text;
  } else {
    std::ofstream f(cfg.out);
    f << text;
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization in rings of integer-valued rational functions over monoid domains"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  app.add_option("--monoid", cfg.monoid, "gap monoid, e.g. \"Q: 0 u [1,inf)\"")->capture_default_str();
  app.add_option("--field", cfg.field, "coefficient field: Q, F2, GF(p)")->capture_default_str();
  app.add_option("--grid-q", cfg.grid_q, "grid denominator q >= 1")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--from", cfg.from, "first grid value")->capture_default_str();
  app.add_option("--to", cfg.to, "last grid value")->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"analyze", "atomicity hypotheses of the monoid"},
      {"lengths", "length sets on a grid: closed form, brute force, IntR"},
      {"catenary", "catenary degrees and witness chains on a grid"},
      {"gadget", "build a gadget: KIND [key=value ...]"},
      {"factor", "factorizations of an element: ELEMENT [LENGTH|all]"},
      {"verify", "run verification suites: [SUITE]"},
  };
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", cfg.args, "positional arguments");
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsage;
  }
  std::string text;
  const int code = run(cfg, text, err);
  out << text;
  return code;
}

}  // namespace intr::cli
