#pragma once

// Versioned JSON and CSV output. Tables hold string cells so that exact
// values (fractions, surds, length sets) survive a round trip unchanged.

#include <string>
#include <vector>

#include "json.hpp"

#include "intr/gadgets_intr.hpp"
#include "intr/intr_factorization.hpp"

namespace intr {

inline constexpr const char* kSchemaVersion = "1";

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Throws PreconditionError when the width differs from columns.
  void add_row(std::vector<std::string> row);
  // Stable sort by the given column, comparing cells as exact values when
  // both parse as group elements and as strings otherwise.
  void sort_by(std::size_t column);
  bool operator==(const Table&) const = default;
};

nlohmann::json to_json(const Table& t);
Table table_from_json(const nlohmann::json& j);

// First line "# schema 1, table <name>", then a header row and the data,
// quoted as in RFC 4180.
std::string to_csv(const Table& t);
Table table_from_csv(const std::string& text);

nlohmann::json to_json(const GroupElement& x);
GroupElement group_element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValueRange& r);
nlohmann::json to_json(const ValueProfile& p);
ValueProfile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LengthSet& l);

// kind, case, alpha, alpha_prime, eps, params, function, profile, membership.
nlohmann::json to_json(const IntRElement& e);
nlohmann::json to_json(const IntRFactorization& z);
nlohmann::json to_json(const DFactorization& z);
nlohmann::json to_json(const HypothesisReport& r);

// {"schema": "1", ...body}
nlohmann::json with_schema(nlohmann::json body);

}  // namespace intr
