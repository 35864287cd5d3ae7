#pragma once

#include <string>

#include "lagnp/newton.hpp"
#include "lagnp/polys.hpp"
#include "lagnp/search.hpp"

// Canonical serialization of the public artifacts. Identical inputs produce
// identical bytes: fixed key order, decimal strings for big integers, no
// timestamps inside the documents.
namespace lagnp::report {

inline constexpr std::string_view kVersion = "1.0.0";

std::string coeffs_json(const polys::LaguerreInstance& inst, const polys::IntegerPolynomial& poly);
std::string polygon_json(const polys::LaguerreInstance& inst, const newton::NewtonPolygon& np);
std::string verdict_json(const criteria::ExclusionVerdict& verdict);
std::string scan_report_json(const search::ScanReport& report);
std::string scan_report_csv(const search::ScanReport& report);
std::string table_report_json(const search::TableReport& report);
std::string table_report_csv(const search::TableReport& report);
std::string smooth_set_json(const search::SmoothWindowSet& set, const search::ScanReport* elim);
std::string smooth_set_csv(const search::SmoothWindowSet& set);

}  // namespace lagnp::report
