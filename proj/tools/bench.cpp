// Benchmark comparing the serial reference kernels against their OpenMP
// versions: the stability scan, the closure/structure-constant scan, the
// coset-module closure scan, and the subset classification.

#include "coxdesc/scan.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef COXDESC_OPENMP
#include <omp.h>
#endif

using namespace coxdesc;

namespace {

double time_ms(const std::function<void()>& f)
{
	auto t0 = std::chrono::steady_clock::now();
	f();
	auto t1 = std::chrono::steady_clock::now();
	return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel)
{
	std::printf("%-34s %9.1f ms %9.1f ms   x%.2f\n", name, serial, parallel,
	            parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv)
{
	int threads = 4;
#ifdef COXDESC_OPENMP
	threads = omp_get_max_threads();
#endif
	if (argc > 1)
		threads = std::atoi(argv[1]);
	std::printf("threads: %d\n", threads);
	std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");

	CoxeterGroup f4 = CoxeterGroup::build(CoxeterMatrix::of_type("F4"));
	RootMask A = class_union_set(f4, 0xFu, 0x1u);
	DescentTable table = DescentTable::build(f4, A);

	report("F4 stability scan",
	       time_ms([&] { descent_stability_violation_serial(f4, A); }),
	       time_ms([&] { descent_stability_violation(f4, A, threads); }));

	report("F4 closure + structure constants",
	       time_ms([&] { descent_algebra_serial(f4, table, 0); }),
	       time_ms([&] { descent_algebra(f4, table, threads, 0); }));

	report("F4 coset-module closure",
	       time_ms([&] { coset_module(f4, A, 1 << 16, 1); }),
	       time_ms([&] { coset_module(f4, A, 1 << 16, threads); }));

	CoxeterGroup b3 = CoxeterGroup::build(CoxeterMatrix::of_type("B3"));
	SubsetScanOptions serial_opts, parallel_opts;
	parallel_opts.threads = threads;
	report("B3 subset classification (512)",
	       time_ms([&] { scan_reflection_subsets_serial(b3, serial_opts); }),
	       time_ms([&] { scan_reflection_subsets(b3, parallel_opts); }));

	CoxeterGroup h3 = CoxeterGroup::build(CoxeterMatrix::of_type("H3"));
	SubsetScanOptions h3s, h3p;
	h3s.require_contains_generators = h3p.require_contains_generators = true;
	h3p.threads = threads;
	report("H3 subset classification (S<=A)",
	       time_ms([&] { scan_reflection_subsets_serial(h3, h3s); }),
	       time_ms([&] { scan_reflection_subsets(h3, h3p); }));
	return 0;
}
