#pragma once

#include "coxdesc/algebra.hpp"

namespace coxdesc {

// One row of the exhaustive classification of subsets A of the reflections:
// descent stability, closure of the spanned algebra, and whether A is a union
// of simple reflections and full reflection classes.
struct SubsetScanRow
{
	RootMask subset = 0;
	bool stable = false;
	bool closed = false;
	bool contains_generators = false;
	bool class_union_form = false;
	// stable should imply closed; rows with closed && !stable are converse
	// candidates, rows with contains_generators && stable && !class_union_form
	// would answer the classification question
	bool converse_candidate() const { return closed && !stable; }
	bool question_candidate() const
	{
		return contains_generators && stable && !class_union_form;
	}
};

struct SubsetScanOptions
{
	bool require_contains_generators = false; // scan only A containing S
	int max_reflections = 15;                 // guard on 2^|T|
	int threads = 1;
};

// Classifies every subset of T (mask order, deterministic). Throws when
// 2^|T| exceeds the guard; the error suggests filtering to A containing S.
std::vector<SubsetScanRow> scan_reflection_subsets(const CoxeterGroup& g,
                                                   const SubsetScanOptions& opts);
std::vector<SubsetScanRow> scan_reflection_subsets_serial(const CoxeterGroup& g,
                                                          const SubsetScanOptions& opts);

} // namespace coxdesc
