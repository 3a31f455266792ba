#include "intr/table.hpp"

#include <algorithm>
#include <sstream>

#include "intr/parse.hpp"

namespace intr {

using nlohmann::json;

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw PreconditionError("row has " + std::to_string(row.size()) + " cells, table " + name + " has " +
                            std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

namespace {

std::optional<GroupElement> as_value(const std::string& s) {
  try {
    return parse_group_element(s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch != '"') {
        cell += ch;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      rec.push_back(cell);
      cell.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !cell.empty()) {
        rec.push_back(cell);
        records.push_back(rec);
      }
      rec.clear();
      cell.clear();
      any = false;
    } else {
      cell += ch;
      any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV");
  if (any || !cell.empty()) {
    rec.push_back(cell);
    records.push_back(rec);
  }
  return records;
}

std::string param(const IntRElement& e, const std::string& name) {
  for (const auto& p : e.params) {
    if (p.name == name) return p.value;
  }
  return "";
}

std::string verdict_json(Verdict v) { return to_string(v); }

}  // namespace

void Table::sort_by(std::size_t column) {
  std::stable_sort(rows.begin(), rows.end(), [column](const auto& a, const auto& b) {
    const auto x = as_value(a[column]);
    const auto y = as_value(b[column]);
    if (x && y) return compare(*x, *y) < 0;
    return a[column] < b[column];
  });
}

json to_json(const Table& t) {
  return json{{"schema", kSchemaVersion}, {"table", t.name}, {"columns", t.columns}, {"rows", t.rows}};
}

Table table_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != std::string(kSchemaVersion)) {
    throw ParseError("table JSON must carry \"schema\": \"1\"");
  }
  Table t;
  try {
    t.name = j.at("table").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) t.add_row(row.get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return t;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  os << "# schema " << kSchemaVersion << ", table " << t.name << "\n";
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << quote(cells[i]);
    os << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

Table table_from_csv(const std::string& text) {
  const std::string prefix = std::string("# schema ") + kSchemaVersion + ", table ";
  if (text.compare(0, prefix.size(), prefix) != 0) throw ParseError("CSV must start with \"" + prefix + "<name>\"");
  const auto eol = text.find('\n');
  if (eol == std::string::npos) throw ParseError("CSV has no header row");
  Table t;
  t.name = text.substr(prefix.size(), eol - prefix.size());
  if (!t.name.empty() && t.name.back() == '\r') t.name.pop_back();
  auto records = split_csv(text.substr(eol + 1));
  if (records.empty()) throw ParseError("CSV has no header row");
  t.columns = records.front();
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != t.columns.size()) {
      throw ParseError("CSV row " + std::to_string(i) + " has " + std::to_string(records[i].size()) + " cells");
    }
    t.rows.push_back(records[i]);
  }
  return t;
}

json to_json(const GroupElement& x) { return x.to_string(); }

GroupElement group_element_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("group element must be a string");
  return parse_group_element(j.get<std::string>());
}

json to_json(const PiecewiseLinear& f) {
  json bps = json::array(), pieces = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(to_json(b));
  for (const auto& p : f.pieces()) pieces.push_back({{"slope", p.slope}, {"intercept", to_json(p.intercept)}});
  return {{"breakpoints", bps}, {"pieces", pieces}};
}

PiecewiseLinear piecewise_from_json(const json& j) {
  try {
    std::vector<GroupElement> bps;
    std::vector<LinePiece> pieces;
    for (const auto& b : j.at("breakpoints")) bps.push_back(group_element_from_json(b));
    for (const auto& p : j.at("pieces")) {
      pieces.push_back({p.at("slope").get<long>(), group_element_from_json(p.at("intercept"))});
    }
    return PiecewiseLinear(bps, pieces);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed piecewise-linear JSON: ") + e.what());
  }
}

json to_json(const ValueRange& r) {
  return {{"lo", r.lo ? to_json(*r.lo) : json(nullptr)}, {"hi", r.hi ? to_json(*r.hi) : json(nullptr)}};
}

json to_json(const ValueProfile& p) {
  json overrides = json::array();
  for (const auto& o : p.overrides) overrides.push_back({{"at", to_json(o.at)}, {"range", to_json(o.range)}});
  return {{"group", p.lattice.to_string()},
          {"generic", to_json(p.generic)},
          {"overrides", overrides},
          {"text", p.to_string()}};
}

ValueProfile profile_from_json(const json& j) {
  try {
    ValueProfile p;
    p.lattice = parse_group(j.at("group").get<std::string>());
    p.generic = piecewise_from_json(j.at("generic"));
    for (const auto& o : j.at("overrides")) {
      ValueRange r;
      const json& range = o.at("range");
      if (!range.at("lo").is_null()) r.lo = group_element_from_json(range.at("lo"));
      if (!range.at("hi").is_null()) r.hi = group_element_from_json(range.at("hi"));
      p.overrides.push_back({group_element_from_json(o.at("at")), r});
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed profile JSON: ") + e.what());
  }
}

json to_json(const LengthSet& l) {
  const auto v = l.values();
  return {{"min", l.min}, {"max", l.max}, {"values", std::vector<long>(v.begin(), v.end())}, {"text", l.to_string()}};
}

json to_json(const IntRElement& e) {
  json params = json::object();
  for (const auto& p : e.params) params[p.name] = p.value;
  json j{{"kind", e.kind},
         {"function", e.func.to_string()},
         {"params", params},
         {"profile", to_json(e.profile)},
         {"membership", to_string(e.membership)},
         {"alpha", e.alpha ? to_json(*e.alpha) : json(nullptr)},
         {"alpha_attained", e.alpha_attained},
         {"note", e.note}};
  j["case"] = param(e, "case").empty() ? json(nullptr) : json(param(e, "case"));
  j["alpha_prime"] = param(e, "alpha'").empty() ? json(nullptr) : json(param(e, "alpha'"));
  j["eps"] = param(e, "eps").empty() ? json(nullptr) : json(param(e, "eps"));
  return j;
}

json to_json(const IntRFactorization& z) {
  json factors = json::array(), atoms = json::array();
  for (const auto& f : z.factors) factors.push_back(to_json(f));
  for (Verdict v : z.atom_flags) atoms.push_back(verdict_json(v));
  return {{"length", z.length()}, {"factors", factors}, {"atoms", atoms}, {"all_atoms", z.all_atoms()}};
}

json to_json(const DFactorization& z) {
  json factors = json::array(), atoms = json::array();
  for (const auto& f : z.factors) factors.push_back(f.to_string());
  for (Verdict v : z.atom_flags) atoms.push_back(verdict_json(v));
  return {{"length", z.factors.size()}, {"value", to_json(z.value)}, {"factors", factors}, {"atoms", atoms}};
}

json to_json(const HypothesisReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"required", c.required}, {"detail", c.detail}});
  }
  return {{"checks", checks},
          {"local_and_atomic", r.local_and_atomic},
          {"certificate", r.certificate},
          {"terminal", r.terminal ? to_json(*r.terminal) : json(nullptr)}};
}

json with_schema(json body) {
  json out{{"schema", kSchemaVersion}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

}  // namespace intr
