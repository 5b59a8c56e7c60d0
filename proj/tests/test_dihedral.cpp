#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdesc/dihedral.hpp"
#include "coxdesc/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace coxdesc;

TEST_CASE("normal forms agree with the enumeration")
{
	for (int m : {2, 3, 5})
	{
		DihedralGroup d = DihedralGroup::make(m); // construction verifies all products
		const CoxeterGroup& g = d.group();
		CHECK(g.order() == 4 * m);
		// w0 = (st)^m is central
		int w0 = d.w0();
		CHECK(w0 == d.rotation(m));
		for (int w = 0; w < g.order(); ++w)
			CHECK(g.product(w0, w) == g.product(w, w0));
		// rotations come from st
		int r = g.product(d.s(), d.t());
		CHECK(d.rotation(1) == r);
		CHECK(d.rotation(2) == g.product(r, r));
	}
	CHECK_THROWS_AS(DihedralGroup::make(1), std::invalid_argument);
}

TEST_CASE("m = 3 is the order-12 group of type I2(6)")
{
	DihedralGroup d = DihedralGroup::make(3);
	CHECK(d.group().order() == 12);
	CHECK(d.group().positive_roots() == 6);
	CHECK(mask_size(d.class_of_t()) == 3);
	CHECK(mask_size(d.subset_b()) == 4);
}

TEST_CASE("character table values")
{
	for (int m : {2, 3, 4, 5, 6, 7})
	{
		DihedralGroup d = DihedralGroup::make(m);
		DihedralCharTable ct = DihedralCharTable::build(d); // verifies itself
		CHECK(static_cast<int>(ct.rows.size()) == m + 3);
		const Field& F = ct.field;
		// the sign conventions: gamma(s) = 1, gamma(t) = -1, eps = -1 on both
		CHECK(ct.row("gamma")[d.group().class_of(d.s())] == F.one());
		CHECK(ct.row("gamma")[d.group().class_of(d.t())] == F.from_int(-1));
		CHECK(ct.row("eps")[d.group().class_of(d.s())] == F.from_int(-1));
		CHECK(ct.row("eps")[d.group().class_of(d.t())] == F.from_int(-1));
		// chi_i(w0) = 2cos(i pi) alternates between -2 and 2
		for (int i = 1; i <= m - 1; ++i)
		{
			const auto& row = ct.row("chi_" + std::to_string(i));
			FieldElement at_w0 = row[d.group().class_of(d.w0())];
			CHECK(at_w0 == F.from_int(i % 2 ? -2 : 2));
			// zero on both reflection classes
			CHECK(row[d.group().class_of(d.s())] == F.zero());
			CHECK(row[d.group().class_of(d.t())] == F.zero());
			// value at the basic rotation is 2cos(i pi / m)
			CHECK(row[d.group().class_of(d.rotation(1))] == F.two_cos(i));
		}
		// chi_1 at m = 2 vanishes on the rotation (st): 2cos(pi/2) = 0
		if (m == 2)
			CHECK(ct.row("chi_1")[d.group().class_of(d.rotation(1))] == F.zero());
		// chi_i = chi_{2m-i}: rebuilding a row with the mirrored index gives the
		// same class function
		auto folded = [&](long prod) {
			long period = 2 * m;
			long x = ((prod % period) + period) % period;
			return static_cast<unsigned>(x > m ? period - x : x);
		};
		for (int i = 1; i <= m - 1; ++i)
		{
			const auto& row = ct.row("chi_" + std::to_string(i));
			for (int c = 0; c < d.group().class_count(); ++c)
			{
				auto f = d.normal_form(d.group().class_rep(c));
				if (f.refl)
					continue;
				CHECK(row[c] == F.two_cos(folded(static_cast<long>(2 * m - i) * f.k)));
			}
		}
	}
}

TEST_CASE("idempotent systems for m = 2..6")
{
	for (int m = 2; m <= 6; ++m)
	{
		DihedralGroup d = DihedralGroup::make(m);
		IdempotentSystem sys = idempotent_system(d); // throws on any failed identity
		CHECK(sys.projective_dims == std::array<int, 5>{1, 2, 1, 1, 1});
		for (int i = 0; i < 5; ++i)
			for (int j = 0; j < 5; ++j)
				CHECK(sys.eval_matrix[i][j] == (i == j ? Rat(1) : Rat(0)));
	}
}

TEST_CASE("bounded infinite-dihedral scans")
{
	// 2L + 1 alternating words up to length L
	CHECK(infinite_dihedral_elements(10).size() == 21);
	CHECK(infinite_dihedral_elements(0).size() == 1);

	auto a = infinite_descent_stability({"s", "t", "sts"}, 50);
	CHECK(a.stable());
	auto b = infinite_descent_stability({"t", "sts"}, 50);
	CHECK(b.stable());
	// frozen by this scan: the mirror image {s,t,tst} is stable as well
	auto c = infinite_descent_stability({"s", "t", "tst"}, 20);
	CHECK(c.stable());
	CHECK(c.pairs_checked > 0);
}

TEST_CASE("infinite-dihedral descent sets use only the finitely many roots")
{
	// anchors: D at the identity is empty; left-multiplying the
	// identity by a member r of A puts r's root in the descent set
	auto rep = infinite_descent_stability({"s"}, 3);
	CHECK(rep.stable());
	// a deliberately unstable set: A = {s, sts} mirrors the finite B2 failure
	auto bad = infinite_descent_stability({"s", "sts"}, 12);
	CHECK(!bad.stable());
	CHECK(bad.violations.front().first == "sts");
	CHECK(bad.violations.front().second == "s");
}

TEST_CASE("verification fails loudly on a tampered fixture")
{
	namespace fs = std::filesystem;
	fs::path tmp = fs::temp_directory_path() / "coxdesc_tamper_test";
	fs::remove_all(tmp);
	fs::create_directories(tmp);
	for (const auto& entry : fs::directory_iterator(COXDESC_DATA_DIR))
		if (entry.is_regular_file())
			fs::copy(entry.path(), tmp / entry.path().filename());
	fs::create_directories(tmp / "regression");
	for (const auto& entry : fs::directory_iterator(fs::path(COXDESC_DATA_DIR) / "regression"))
		fs::copy(entry.path(), tmp / "regression" / entry.path().filename());

	// corrupt one rank in the rank table
	{
		std::ifstream in(tmp / "dihedral_b_ranks.json");
		nlohmann::json doc = nlohmann::json::parse(in);
		REQUIRE(doc.at("rows").back()[2] == 16);
		doc["rows"].back()[2] = 17;
		std::ofstream out(tmp / "dihedral_b_ranks.json");
		out << doc.dump(1);
	}
	VerifyOptions opts;
	opts.data_dir = tmp.string();
	std::vector<CheckResult> results;
	run_verification_section("dihedral-b", opts, results);
	bool found_failure = false;
	for (const auto& r : results)
		if (r.id == "dihedral_b.ranks.m11")
			found_failure = !r.pass;
	CHECK(found_failure);
	fs::remove_all(tmp);
}

TEST_CASE("verification passes on the shipped fixtures (dihedral sections)")
{
	VerifyOptions opts;
	opts.data_dir = COXDESC_DATA_DIR;
	std::vector<CheckResult> results;
	run_verification_section("dihedral-a", opts, results);
	run_verification_section("g2-b", opts, results);
	run_verification_section("idempotents", opts, results);
	for (const auto& r : results)
	{
		CAPTURE(r.id);
		CHECK(r.pass);
	}
}
