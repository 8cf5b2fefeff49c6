#ifndef KODCALC_REPORT_IO_HPP
#define KODCALC_REPORT_IO_HPP

// JSON and fixed-width text renderings of models, verdicts and reports.
// JSON numbers are exact integers; -infinity and Kodaira values are strings.

#include <string>

#include <json.hpp>

#include "kodcalc/verifier.hpp"

namespace kodcalc {

nlohmann::json to_json(const SurfaceModel& s);
nlohmann::json to_json(const ThreefoldModel& x);
nlohmann::json to_json(const IntersectionForm& f);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ChernTriple& t);
nlohmann::json to_json(const DeformationEvidence& e);
nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const AnomalyFlag& flag);

nlohmann::json catalog_json();

// Wraps a payload as a versioned top-level document: {"schema": 1, ...}.
nlohmann::json json_document(nlohmann::json payload);

std::string report_table(const VerificationReport& report);
std::string surface_table(const SurfaceModel& s);
std::string threefold_table(const ThreefoldModel& x);
std::string catalog_table();

} // namespace kodcalc

#endif
