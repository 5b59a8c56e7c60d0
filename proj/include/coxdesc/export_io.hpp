#pragma once

#include "coxdesc/scan.hpp"
#include "coxdesc/verify.hpp"

#include <json.hpp>

#include <string>

namespace coxdesc {

// Structure-constant export (see docs/formats.md). The tensor rows carry only
// the nonzero entries, as [I, J, K, c].
nlohmann::json structure_export(const CoxeterGroup& g, const DescentTable& table);
// Re-derives everything in the export from its embedded matrix and compares;
// true exactly when the export is reproduced bit-for-bit.
bool validate_structure_export(const nlohmann::json& doc);
std::string structure_export_csv(const CoxeterGroup& g, const DescentTable& table);

nlohmann::json scan_export(const CoxeterGroup& g, const std::vector<SubsetScanRow>& rows);
std::string scan_export_csv(const CoxeterGroup& g, const std::vector<SubsetScanRow>& rows);

// RFC-style CSV quoting (quotes doubled, fields quoted when needed).
std::string csv_quote(const std::string& field);

} // namespace coxdesc
