#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace coxdesc {

// Exact arithmetic carriers. All algebraic data in the library is exact;
// no floating point is used anywhere outside of benchmarks.
using BigInt = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q)
{
	return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

inline Rat make_rat(const BigInt& num, const BigInt& den)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline Rat make_rat(long num, long den)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const Rat& q)
{
	if (is_integer(q))
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s);

// Deterministic content hash (FNV-1a), stable across platforms and runs.
inline std::uint64_t fnv1a(const std::string& s)
{
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : s)
	{
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

std::string hex64(std::uint64_t v);

} // namespace coxdesc
