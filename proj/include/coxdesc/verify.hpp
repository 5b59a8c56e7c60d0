#pragma once

#include "coxdesc/scan.hpp"

#include <string>
#include <vector>

namespace coxdesc {

// One verified identity: an id, a verdict, and the two compared sides
// rendered as text (for the report when they disagree, and for audit).
struct CheckResult
{
	std::string id;
	bool pass = false;
	std::string lhs, rhs;
};

struct VerifyOptions
{
	std::string data_dir = "data"; // fixture tables live here
	int threads = 1;
};

// Section names: f4, dihedral-a, dihedral-a-props, dihedral-b, g2-b,
// idempotents, properties, infinite, scan.
std::vector<std::string> verification_sections();

// Runs one section (exact name) and appends to `out`.
void run_verification_section(const std::string& section, const VerifyOptions& opts,
                              std::vector<CheckResult>& out);

// Runs every section whose name starts with `only` (all of them when empty).
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const std::string& only = "");

std::string report_to_json(const std::vector<CheckResult>& results);

} // namespace coxdesc
