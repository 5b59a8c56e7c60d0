#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdesc/lattice.hpp"

using namespace coxdesc;

static IntVec vec(std::initializer_list<long> xs)
{
	IntVec v;
	for (long x : xs)
		v.emplace_back(x);
	return v;
}

TEST_CASE("echelon lattice membership against brute force")
{
	// lattice spanned by (2,0,1) and (0,3,1) in Z^3; brute-force the small box
	IntegerLattice lat(3);
	lat.insert(vec({2, 0, 1}));
	lat.insert(vec({0, 3, 1}));
	CHECK(lat.rank() == 2);
	for (long a = -4; a <= 4; ++a)
		for (long b = -4; b <= 4; ++b)
			for (long c = -4; c <= 4; ++c)
			{
				bool member = false;
				for (long x = -8; x <= 8 && !member; ++x)
					for (long y = -8; y <= 8 && !member; ++y)
						member = (2 * x == a) && (3 * y == b) && (x + y == c);
				CHECK(lat.contains(vec({a, b, c})) == member);
			}
}

TEST_CASE("insert reports change and equal lattices compare equal")
{
	IntegerLattice a(3), b(3);
	a.insert(vec({1, 2, 3}));
	a.insert(vec({0, 2, 2}));
	// same lattice from a unimodular change of generators
	b.insert(vec({1, 4, 5}));  // a1 + a2
	b.insert(vec({1, 2, 3}));  // a1
	CHECK(a.same_lattice(b));
	CHECK(!a.insert(vec({1, 6, 7})));  // already inside
	CHECK(a.insert(vec({0, 0, 1})));   // grows
	CHECK(!a.same_lattice(b));
	CHECK(a.contains(b));
	CHECK(!b.contains(a));
}

TEST_CASE("canonical HNF is identical for equal lattices")
{
	IntegerLattice a(4), b(4);
	a.insert(vec({2, 4, 6, 0}));
	a.insert(vec({0, 3, 7, 1}));
	a.insert(vec({0, 0, 5, 5}));
	// unimodular combinations: a1 + a2, a2, a3 + 2 a1
	b.insert(vec({2, 7, 13, 1}));
	b.insert(vec({0, 3, 7, 1}));
	b.insert(vec({4, 8, 17, 5}));
	REQUIRE(a.same_lattice(b));
	a.canonicalize();
	b.canonicalize();
	CHECK(a.rows() == b.rows());
	// pivots positive, entries above reduced
	for (std::size_t r = 0; r < a.rows().size(); ++r)
		CHECK(a.rows()[r][a.pivots()[r]] > 0);
}

TEST_CASE("rational rank and left nullspace")
{
	RatMat m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
	CHECK(rational_rank(m) == 2);
	auto kernel = rational_left_nullspace(m);
	REQUIRE(kernel.size() == 1);
	// kernel vector annihilates the rows
	for (int col = 0; col < 3; ++col)
	{
		Rat acc(0);
		for (int row = 0; row < 3; ++row)
			acc += kernel[0][row] * m[row][col];
		CHECK(acc == 0);
	}
}

TEST_CASE("solve in rowspace")
{
	RatMat m = {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
	auto c = solve_in_rowspace(m, {Rat(2), Rat(3), Rat(5)});
	REQUIRE(c.has_value());
	CHECK((*c)[0] == 2);
	CHECK((*c)[1] == 3);
	CHECK(!solve_in_rowspace(m, {Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("integer left kernel is a full kernel lattice")
{
	IntMat m = {vec({2, 4}), vec({1, 2}), vec({3, 6}), vec({0, 5})};
	IntMat kernel = integer_left_kernel(m);
	// every kernel row annihilates m
	for (const auto& k : kernel)
		for (int col = 0; col < 2; ++col)
		{
			BigInt acc = 0;
			for (std::size_t row = 0; row < m.size(); ++row)
				acc += k[row] * m[row][col];
			CHECK(acc == 0);
		}
	// rank of kernel = rows - rank(m) = 4 - 2
	IntegerLattice lat(4);
	for (const auto& k : kernel)
		lat.insert(k);
	CHECK(lat.rank() == 2);
	// the known small solutions are inside: (1,-2,0,0) and (3,0,-2,0)
	CHECK(lat.contains(vec({1, -2, 0, 0})));
	CHECK(lat.contains(vec({3, 0, -2, 0})));
	CHECK(!lat.contains(vec({1, 0, 0, 0})));
}

TEST_CASE("dimension mismatch throws")
{
	IntegerLattice lat(3);
	CHECK_THROWS_AS(lat.insert(vec({1, 2})), std::invalid_argument);
	CHECK_THROWS_AS(lat.contains(vec({1, 2, 3, 4})), std::invalid_argument);
}
