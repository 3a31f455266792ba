#include <random>

#include "doctest.h"
#include "intr/parse.hpp"
#include "intr/table.hpp"

using namespace intr;
using nlohmann::json;

namespace {

Table sample_table() {
  Table t{"lengths", {"v", "closed_form", "bruteforce", "agree"}, {}};
  t.add_row({"5/2", "{2}", "{2}", "true"});
  t.add_row({"1+2*sqrt2", "{2,3}", "{2, 3}", "true"});
  t.add_row({"6", "[4,6]", "say \"hi\"\nnext line", "false"});
  t.add_row({"", ",", "\"", ""});
  return t;
}

}  // namespace

TEST_CASE("table round trips") {
  const Table t = sample_table();
  CHECK(table_from_json(to_json(t)) == t);
  CHECK(table_from_json(json::parse(to_json(t).dump())) == t);
  CHECK(table_from_csv(to_csv(t)) == t);
  CHECK(to_json(t)["schema"] == "1");
  CHECK(to_csv(t).rfind("# schema 1, table lengths\n", 0) == 0);

  Table empty{"empty", {"a"}, {}};
  CHECK(table_from_csv(to_csv(empty)) == empty);
  CHECK(table_from_json(to_json(empty)) == empty);

  std::mt19937_64 rng(9);
  const std::string alphabet = "ab,\"\n 1/";
  for (int i = 0; i < 50; ++i) {
    Table r{"random", {"c0", "c1", "c2"}, {}};
    for (int row = 0; row < 5; ++row) {
      std::vector<std::string> cells;
      for (int c = 0; c < 3; ++c) {
        std::string s;
        for (int k = rng() % 6; k > 0; --k) s += alphabet[rng() % alphabet.size()];
        cells.push_back(s);
      }
      r.add_row(cells);
    }
    CHECK(table_from_csv(to_csv(r)) == r);
    CHECK(table_from_json(json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("table errors and sorting") {
  Table t{"x", {"a", "b"}, {}};
  CHECK_THROWS_AS(t.add_row({"1"}), PreconditionError);
  CHECK_THROWS_AS(table_from_csv("a,b\n1,2\n"), ParseError);
  CHECK_THROWS_AS(table_from_csv("# schema 1, table x\na,b\n1\n"), ParseError);
  CHECK_THROWS_AS(table_from_json(json{{"schema", "2"}}), ParseError);
  CHECK_THROWS_AS(table_from_json(json{{"schema", "1"}, {"table", "x"}}), ParseError);

  t.add_row({"10", "p"});
  t.add_row({"sqrt2", "q"});
  t.add_row({"3/2", "r"});
  t.sort_by(0);
  CHECK(t.rows[0][0] == "sqrt2");
  CHECK(t.rows[1][0] == "3/2");
  CHECK(t.rows[2][0] == "10");
}

TEST_CASE("profile and piecewise JSON") {
  GadgetContext ctx;
  ctx.spec = MonoidSpec::one_gap(Lattice::quadratic_integers(2));
  const IntRElement z = gadget_zigzag({0, 1, GroupElement(2, -1, 2), ZigZagCase::Auto}, ctx);
  const json j = to_json(z);
  CHECK(j["kind"] == "zigzag");
  CHECK(j["case"] == "pth-power");
  CHECK(j["alpha"] == "0");
  CHECK(j["alpha_prime"] == "1");
  CHECK(j["eps"] == GroupElement(2, -1, 2).to_string());
  CHECK(j["params"]["alpha''"] == GroupElement(-2, 2, 2).to_string());
  const ValueProfile back = profile_from_json(json::parse(j["profile"].dump()));
  CHECK(back.generic == z.profile.generic);
  CHECK(back.lattice == z.profile.lattice);
  CHECK(back.overrides.size() == z.profile.overrides.size());
  CHECK(parse_rational_function(j["function"].get<std::string>(), ctx.field) == z.func);

  const IntRElement sw = gadget_stone_weierstrass(FieldElement::constant(ctx.field, 1), 1, Lattice::rationals());
  const ValueProfile p = profile_from_json(to_json(sw.profile));
  REQUIRE(p.overrides.size() == sw.profile.overrides.size());
  for (std::size_t i = 0; i < p.overrides.size(); ++i) {
    CHECK(p.overrides[i].at == sw.profile.overrides[i].at);
    CHECK(p.overrides[i].range.to_string() == sw.profile.overrides[i].range.to_string());
  }

  const PiecewiseLinear f({GroupElement(Rational(1, 3)), GroupElement(0, 1, 3)}, {{2, 0}, {0, Rational(2, 3)}, {-1, 1}});
  CHECK(piecewise_from_json(json::parse(to_json(f).dump())) == f);
}

TEST_CASE("factorization and report JSON") {
  GadgetContext ctx;
  const IntRElement d = make_constant(FieldElement::t(ctx.field, 6), ctx);
  const json z = to_json(factorization_intr(d, 3, ctx));
  CHECK(z["length"] == 3);
  CHECK(z["all_atoms"] == true);
  CHECK(z["factors"].size() == 3);

  const json r = with_schema(to_json(check_atomic_hypotheses(ctx.spec, ctx.field)));
  CHECK(r["schema"] == "1");
  CHECK(r["local_and_atomic"] == true);
  CHECK(r.dump() == with_schema(to_json(check_atomic_hypotheses(ctx.spec, ctx.field))).dump());
}
