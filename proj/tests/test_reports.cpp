#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lagnp/fixtures.hpp"
#include "lagnp/report.hpp"
#include "lagnp/search.hpp"

using namespace lagnp;
using nlohmann::json;

namespace {

// Minimal structural validator for the subset of JSON Schema the bundled
// schema uses: type, required, properties, items, enum, $ref into $defs.
bool validate(const json& schema, const json& value, const json& defs);

bool validate_type(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "boolean") return value.is_boolean();
  return false;
}

bool validate(const json& schema, const json& value, const json& defs) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const auto key = ref.substr(ref.find_last_of('/') + 1);
    return validate(defs.at(key), value, defs);
  }
  if (schema.contains("type") && !validate_type(schema["type"], value)) return false;
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || option == value;
    if (!found) return false;
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !validate(sub, value.at(key), defs)) return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!validate(schema["items"], item, defs)) return false;
  return true;
}

json load_schema() {
  std::ifstream in(fixtures::default_data_dir() + "/schema/lagnp.schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

bool conforms(const std::string& doc_text, const std::string& def_name) {
  const json schema = load_schema();
  const json doc = json::parse(doc_text);
  return validate(schema["$defs"].at(def_name), doc, schema["$defs"]);
}

}  // namespace

TEST_CASE("identical invocations produce identical bytes") {
  search::TripleRange range{{2, 4}, {0, ~std::uint64_t{0}}, {1, 20}, search::Regime::Inner};
  search::ScanOptions a, b;
  a.jobs = 1;
  b.jobs = 3;
  const auto first = search::scan(range, a);
  const auto second = search::scan(range, b);
  CHECK(report::scan_report_json(first) == report::scan_report_json(second));
  // wall-clock time differs between runs but never reaches the bytes
  CHECK(report::scan_report_json(first).find("seconds") == std::string::npos);
}

TEST_CASE("big coefficients serialize as decimal strings") {
  const polys::LaguerreInstance inst{92, 92};
  const auto doc = report::coeffs_json(inst, polys::g1_coefficients(inst));
  CHECK(conforms(doc, "coeffs"));
  const json parsed = json::parse(doc);
  const std::string c0 = parsed["coeffs"][0];
  CHECK(c0.size() > 100);  // far beyond any machine integer
  for (char ch : c0) CHECK(ch >= '0');
}

TEST_CASE("polygon documents carry exact slope strings") {
  const polys::LaguerreInstance inst{10, 5};
  const auto doc = report::polygon_json(inst, newton::newton_polygon(inst, 3));
  CHECK(conforms(doc, "polygon"));
  const json parsed = json::parse(doc);
  CHECK(parsed["vertices"] == json::parse("[[0,0],[9,4],[10,5]]"));
  CHECK(parsed["slopes"] == json::parse(R"(["4/9","1/1"])"));
}

TEST_CASE("verdict documents conform to the schema") {
  const auto verdict = criteria::excludes_factor_degree({6, 47}, 3);
  CHECK(conforms(report::verdict_json(verdict), "check"));
  const json parsed = json::parse(report::verdict_json(verdict));
  CHECK(parsed["kind"] == "ExcludedByRobustDumas");
  CHECK(parsed["prime"] == 2);
}

TEST_CASE("scan reports conform to the schema, json and csv") {
  search::TripleRange range{{2, 3}, {0, ~std::uint64_t{0}}, {1, 10}, search::Regime::Inner};
  const auto rep = search::scan(range);
  CHECK(conforms(report::scan_report_json(rep), "scan_report"));
  const auto csv = report::scan_report_csv(rep);
  CHECK(csv.rfind("n,k,s,kind,prime\n", 0) == 0);
  // one line per verdict plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rep.verdicts.size()) + 1);
}

TEST_CASE("table reports conform to the schema") {
  const auto fx = fixtures::load();
  const auto rep = search::reproduce_table("table2", fx);
  CHECK(conforms(report::table_report_json(rep), "table_report"));
}

TEST_CASE("smooth-window documents conform to the schema") {
  const auto set = search::smooth_window_scan(7, 1000, 100);
  const auto elim = search::eliminate_dk_triples(set, {10, 92});
  CHECK(conforms(report::smooth_set_json(set, &elim), "smooth_window_set"));
  CHECK(conforms(report::smooth_set_json(set, nullptr), "smooth_window_set"));
}
