#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdesc/cyclotomic.hpp"

#include <cmath>

using namespace coxdesc;

TEST_CASE("minimal polynomials of 2cos(pi/n) for small n")
{
	// frozen from the cyclotomic construction, cross-checked below numerically
	struct Row
	{
		unsigned n;
		std::vector<long> coeffs;
	};
	std::vector<Row> rows = {
	    {2, {0, 1}},            // c = 0
	    {3, {-1, 1}},           // c = 1
	    {4, {-2, 0, 1}},        // c = sqrt 2
	    {6, {-3, 0, 1}},        // c = sqrt 3
	    {5, {-1, -1, 1}},       // golden ratio
	    {12, {1, 0, -4, 0, 1}}, // 2cos(pi/12)
	};
	for (const auto& row : rows)
	{
		Field f = Field::make(row.n);
		REQUIRE(f.minpoly().size() == row.coeffs.size());
		for (std::size_t i = 0; i < row.coeffs.size(); ++i)
			CHECK(f.minpoly()[i] == row.coeffs[i]);
	}
}

TEST_CASE("numeric root check: minpoly(2cos(pi/n)) is ~0 and degree is phi(2n)/2")
{
	for (unsigned n = 2; n <= 24; ++n)
	{
		Field f = Field::make(n);
		CHECK(f.degree() == euler_totient(2 * n) / 2);
		double c = 2.0 * std::cos(M_PI / n);
		double value = 0, power = 1;
		for (const auto& coeff : f.minpoly())
		{
			value += coeff.get_d() * power;
			power *= c;
		}
		CHECK(std::abs(value) < 1e-9);
		// the minpoly must be monic
		CHECK(f.minpoly().back() == 1);
	}
}

TEST_CASE("Chebyshev endpoints: 2cos(pi) = -2 and 2cos(0) = 2 inside the field")
{
	for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 12u})
	{
		Field f = Field::make(n);
		CHECK(f.two_cos(n) == f.from_int(-2));
		CHECK(f.two_cos(2 * n) == f.from_int(2));
		CHECK(f.two_cos(0) == f.from_int(2));
	}
}

TEST_CASE("companion matrix of the minpoly is annihilated by the minpoly")
{
	for (unsigned n : {4u, 5u, 6u, 12u, 22u})
	{
		Field f = Field::make(n);
		unsigned d = f.degree();
		// companion matrix C over Q
		std::vector<std::vector<Rat>> C(d, std::vector<Rat>(d, Rat(0)));
		for (unsigned i = 0; i + 1 < d; ++i)
			C[i + 1][i] = 1;
		for (unsigned i = 0; i < d; ++i)
			C[i][d - 1] = -Rat(f.minpoly()[i]);
		auto mul = [&](const std::vector<std::vector<Rat>>& a,
		               const std::vector<std::vector<Rat>>& b) {
			std::vector<std::vector<Rat>> out(d, std::vector<Rat>(d, Rat(0)));
			for (unsigned i = 0; i < d; ++i)
				for (unsigned k = 0; k < d; ++k)
					for (unsigned j = 0; j < d; ++j)
						out[i][j] += a[i][k] * b[k][j];
			return out;
		};
		std::vector<std::vector<Rat>> acc(d, std::vector<Rat>(d, Rat(0)));
		std::vector<std::vector<Rat>> power(d, std::vector<Rat>(d, Rat(0)));
		for (unsigned i = 0; i < d; ++i)
			power[i][i] = 1;
		for (unsigned k = 0; k <= d; ++k)
		{
			for (unsigned i = 0; i < d; ++i)
				for (unsigned j = 0; j < d; ++j)
					acc[i][j] += Rat(f.minpoly()[k]) * power[i][j];
			power = mul(power, C);
		}
		for (unsigned i = 0; i < d; ++i)
			for (unsigned j = 0; j < d; ++j)
				CHECK(acc[i][j] == 0);
	}
}

TEST_CASE("field arithmetic")
{
	Field f = Field::make(4);
	FieldElement c = f.generator();
	CHECK(c * c == f.from_int(2)); // c = sqrt 2
	CHECK(c + f.zero() == c);
	CHECK((c / c) == f.one());
	CHECK((f.one() / c) * c == f.one());
	CHECK_THROWS_AS(f.one() / f.zero(), std::domain_error);
	CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);

	// axioms on a handful of exact samples
	Field g = Field::make(12);
	auto elem = [&](long a, long b, long cc, long dd) {
		FieldElement x = g.from_int(a);
		FieldElement gen = g.generator();
		x += g.from_int(b) * gen;
		x += g.from_int(cc) * gen * gen;
		x += g.from_int(dd) * gen * gen * gen;
		return x;
	};
	std::vector<FieldElement> samples = {elem(1, 0, 0, 0), elem(0, 1, 0, 0), elem(2, -3, 1, 0),
	                                     elem(-1, 2, 0, 5), elem(7, 7, -2, 1)};
	for (const auto& x : samples)
		for (const auto& y : samples)
		{
			CHECK(x + y == y + x);
			CHECK(x * y == y * x);
			for (const auto& z : samples)
			{
				CHECK((x + y) + z == x + (y + z));
				CHECK((x * y) * z == x * (y * z));
				CHECK(x * (y + z) == x * y + x * z);
			}
			if (!y.is_zero())
				CHECK((x / y) * y == x);
		}
}

TEST_CASE("cosine values")
{
	Field f = Field::make(6);
	CHECK(f.cos_pi_over(2) == f.zero());              // cos(pi/2)
	CHECK(f.cos_pi_over(3) == f.from_rational(make_rat(1, 2)));
	CHECK(f.cos_pi_over(kInfiniteBond) == f.one());   // unbounded bond convention
	CHECK_THROWS_WITH_AS(f.cos_pi_over(4), doctest::Contains("conductor mismatch"),
	                     std::invalid_argument);

	Field f3 = Field::make(3);
	CHECK(f3.cos_pi_over(3) == f3.from_rational(make_rat(1, 2)));
}

TEST_CASE("degenerate fields")
{
	// n = 1: c = 2cos(pi) = -2, the field is Q
	Field f1 = Field::make(1);
	CHECK(f1.degree() == 1);
	CHECK(f1.generator() == f1.from_int(-2));
	// n = 2: c = 0
	Field f2 = Field::make(2);
	CHECK(f2.generator() == f2.zero());
	CHECK_THROWS_AS(Field::make(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials")
{
	CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
	CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
	CHECK(cyclotomic_polynomial(8) == IntPoly{1, 0, 0, 0, 1});
	CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
	// product over divisors reassembles x^n - 1
	for (unsigned n : {6u, 10u, 12u, 30u})
	{
		IntPoly prod = {1};
		for (unsigned d = 1; d <= n; ++d)
			if (n % d == 0)
				prod = poly_mul(prod, cyclotomic_polynomial(d));
		IntPoly want(n + 1, BigInt(0));
		want[0] = -1;
		want[n] = 1;
		CHECK(prod == want);
	}
}
