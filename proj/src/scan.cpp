#include "coxdesc/scan.hpp"

#include <stdexcept>

#ifdef COXDESC_OPENMP
#include <omp.h>
#endif

namespace coxdesc {

namespace {

SubsetScanRow classify(const CoxeterGroup& g, RootMask A)
{
	SubsetScanRow row;
	row.subset = A;
	row.stable = is_descent_stable(g, A);
	DescentTable table = DescentTable::build(g, A);
	row.closed = descent_algebra_serial(g, table, 0).closed;
	row.contains_generators = (A & g.simple_mask()) == g.simple_mask();
	row.class_union_form = is_class_union_form(g, A);
	return row;
}

} // namespace

// the subsets to classify, in deterministic (ascending mask) order
static std::vector<RootMask> scan_targets(const CoxeterGroup& g, const SubsetScanOptions& opts)
{
	int t = g.positive_roots();
	std::vector<RootMask> targets;
	if (opts.require_contains_generators)
	{
		if (t - static_cast<int>(g.rank()) > opts.max_reflections)
			throw std::runtime_error("scan: 2^(|T|-|S|) exceeds the subset budget");
		RootMask s = g.simple_mask();
		std::vector<int> others;
		for (int r = static_cast<int>(g.rank()); r < t; ++r)
			others.push_back(r);
		std::size_t n = std::size_t(1) << others.size();
		targets.reserve(n);
		for (std::size_t mask = 0; mask < n; ++mask)
		{
			RootMask A = s;
			for (std::size_t b = 0; b < others.size(); ++b)
				if ((mask >> b) & 1u)
					A |= root_bit(others[b]);
			targets.push_back(A);
		}
	}
	else
	{
		if (t > opts.max_reflections)
			throw std::runtime_error(
			    "scan: 2^|T| exceeds the subset budget; restrict with contains-generators");
		std::size_t n = std::size_t(1) << t;
		targets.reserve(n);
		for (std::size_t mask = 0; mask < n; ++mask)
			targets.push_back(static_cast<RootMask>(mask));
	}
	return targets;
}

std::vector<SubsetScanRow> scan_reflection_subsets_serial(const CoxeterGroup& g,
                                                          const SubsetScanOptions& opts)
{
	std::vector<RootMask> targets = scan_targets(g, opts);
	std::vector<SubsetScanRow> rows;
	rows.reserve(targets.size());
	for (RootMask A : targets)
		rows.push_back(classify(g, A));
	return rows;
}

std::vector<SubsetScanRow> scan_reflection_subsets(const CoxeterGroup& g,
                                                   const SubsetScanOptions& opts)
{
#ifdef COXDESC_OPENMP
	if (opts.threads > 1)
	{
		std::vector<RootMask> targets = scan_targets(g, opts);
		std::vector<SubsetScanRow> rows(targets.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(opts.threads)
		for (std::size_t i = 0; i < targets.size(); ++i)
			rows[i] = classify(g, targets[i]);
		return rows;
	}
#endif
	return scan_reflection_subsets_serial(g, opts);
}

} // namespace coxdesc

