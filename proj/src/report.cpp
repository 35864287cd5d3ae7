#include "lagnp/report.hpp"

#include <json.hpp>
#include <sstream>

namespace lagnp::report {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json verdict_node(const criteria::ExclusionVerdict& v) {
  ordered_json node;
  node["n"] = v.triple.n;
  node["k"] = v.triple.k;
  node["s"] = v.triple.s;
  node["kind"] = std::string(criteria::to_string(v.kind));
  if (v.prime != 0) node["prime"] = v.prime;
  if (v.kind == criteria::VerdictKind::ExcludedByFilaseta) node["l"] = v.filaseta_l;
  return node;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string coeffs_json(const polys::LaguerreInstance& inst, const polys::IntegerPolynomial& poly) {
  ordered_json doc;
  doc["n"] = inst.n;
  doc["s"] = inst.s;
  ordered_json arr = ordered_json::array();
  for (const auto& c : poly.coeffs) arr.push_back(c.get_str());
  doc["coeffs"] = std::move(arr);
  return dump(doc);
}

std::string polygon_json(const polys::LaguerreInstance& inst, const newton::NewtonPolygon& np) {
  ordered_json doc;
  doc["n"] = inst.n;
  doc["s"] = inst.s;
  doc["prime"] = np.prime;
  ordered_json verts = ordered_json::array();
  for (const auto& v : np.vertices) verts.push_back(ordered_json::array({v.x, v.y}));
  doc["vertices"] = std::move(verts);
  ordered_json slopes = ordered_json::array();
  for (const auto& e : np.edges()) slopes.push_back(e.slope().str());
  doc["slopes"] = std::move(slopes);
  return dump(doc);
}

std::string verdict_json(const criteria::ExclusionVerdict& v) {
  ordered_json doc;
  doc["triple"] = ordered_json::array({v.triple.n, v.triple.k, v.triple.s});
  doc["kind"] = std::string(criteria::to_string(v.kind));
  if (v.prime != 0) doc["prime"] = v.prime;
  std::string detail;
  switch (v.kind) {
    case criteria::VerdictKind::ExcludedByPrimeWitness:
      detail = "prime exceeds k, divides the falling window, misses C(n+s, s)";
      break;
    case criteria::VerdictKind::ExcludedByFilaseta:
      detail = "rightmost slope below 1/k with l = " + std::to_string(v.filaseta_l);
      break;
    case criteria::VerdictKind::ExcludedByRobustDumas:
      detail = "every reachable polygon omits degree k";
      break;
    case criteria::VerdictKind::NotExcluded:
      detail = "no criterion certified the exclusion";
      break;
    case criteria::VerdictKind::Inconclusive:
      detail = "case enumeration or degree budget exhausted";
      break;
  }
  doc["detail"] = detail;
  return dump(doc);
}

namespace {

ordered_json range_node(const search::TripleRange& range) {
  ordered_json node;
  node["k"] = ordered_json::array({range.k.lo, range.k.hi});
  node["n"] = ordered_json::array({range.n.lo, range.n.hi});
  node["s"] = ordered_json::array({range.s.lo, range.s.hi});
  node["regime"] = std::string(search::to_string(range.regime));
  return node;
}

}  // namespace

std::string scan_report_json(const search::ScanReport& report) {
  ordered_json doc;
  doc["range"] = range_node(report.range);
  ordered_json survivors = ordered_json::array();
  for (const auto& t : report.survivors) survivors.push_back(ordered_json::array({t.n, t.k, t.s}));
  doc["survivors"] = std::move(survivors);
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(verdict_node(v));
  doc["verdicts"] = std::move(verdicts);
  doc["no_witness_count"] = report.no_witness_count;
  doc["meta"] = ordered_json{{"version", std::string(kVersion)}};
  return dump(doc);
}

std::string scan_report_csv(const search::ScanReport& report) {
  std::ostringstream os;
  os << "n,k,s,kind,prime\n";
  for (const auto& v : report.verdicts)
    os << v.triple.n << ',' << v.triple.k << ',' << v.triple.s << ','
       << criteria::to_string(v.kind) << ',' << v.prime << '\n';
  return os.str();
}

std::string table_report_json(const search::TableReport& report) {
  ordered_json doc;
  doc["name"] = report.name;
  doc["all_agree"] = report.all_agree;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["row"] = r.row;
    row["agree"] = r.agree;
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["meta"] = ordered_json{{"version", std::string(kVersion)}};
  return dump(doc);
}

std::string table_report_csv(const search::TableReport& report) {
  std::ostringstream os;
  os << "row,agree,detail\n";
  for (const auto& r : report.rows) {
    std::string detail = r.detail;
    for (char& c : detail)
      if (c == ',') c = ';';
    os << r.row << ',' << (r.agree ? "yes" : "no") << ',' << detail << '\n';
  }
  return os.str();
}

std::string smooth_set_json(const search::SmoothWindowSet& set, const search::ScanReport* elim) {
  ordered_json doc;
  doc["k"] = set.k;
  doc["bound"] = set.bound;
  doc["members"] = set.members;
  if (elim) {
    ordered_json survivors = ordered_json::array();
    for (const auto& t : elim->survivors) survivors.push_back(ordered_json::array({t.n, t.k, t.s}));
    doc["survivors"] = std::move(survivors);
  }
  doc["meta"] = ordered_json{{"version", std::string(kVersion)}};
  return dump(doc);
}

std::string smooth_set_csv(const search::SmoothWindowSet& set) {
  std::ostringstream os;
  os << "n\n";
  for (const auto& m : set.members) os << m << '\n';
  return os.str();
}

}  // namespace lagnp::report
