#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdesc/coxeter.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

using namespace coxdesc;

namespace {

// Independent oracle: order of the group generated by permutations of
// {0..n-1}, by plain closure over composition. Used to pin expected orders
// without touching the root-system machinery.
long permutation_group_order(const std::vector<std::vector<int>>& gens)
{
	std::set<std::vector<int>> seen;
	std::vector<std::vector<int>> queue = {gens[0]};
	std::vector<int> id(gens[0].size());
	for (std::size_t i = 0; i < id.size(); ++i)
		id[i] = static_cast<int>(i);
	seen.insert(id);
	queue = {id};
	while (!queue.empty())
	{
		std::vector<int> cur = queue.back();
		queue.pop_back();
		for (const auto& gen : gens)
		{
			std::vector<int> next(cur.size());
			for (std::size_t i = 0; i < cur.size(); ++i)
				next[i] = gen[cur[i]];
			if (seen.insert(next).second)
				queue.push_back(next);
		}
	}
	return static_cast<long>(seen.size());
}

std::vector<int> transposition(int n, int a, int b)
{
	std::vector<int> p(n);
	for (int i = 0; i < n; ++i)
		p[i] = i;
	std::swap(p[a], p[b]);
	return p;
}

// signed permutations of {1..n} realized as permutations of {0..2n-1}
// (i <-> i+n is the sign flip)
std::vector<int> signed_flip(int n, int coord)
{
	std::vector<int> p(2 * n);
	for (int i = 0; i < 2 * n; ++i)
		p[i] = i;
	std::swap(p[coord], p[coord + n]);
	return p;
}

std::vector<int> signed_swap(int n, int a, int b)
{
	std::vector<int> p(2 * n);
	for (int i = 0; i < 2 * n; ++i)
		p[i] = i;
	std::swap(p[a], p[b]);
	std::swap(p[a + n], p[b + n]);
	return p;
}

} // namespace

TEST_CASE("orders match independent permutation models")
{
	// A_n as adjacent transpositions in S_{n+1}
	CHECK(permutation_group_order({transposition(3, 0, 1), transposition(3, 1, 2)}) == 6);
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("A2")).order() == 6);
	CHECK(permutation_group_order(
	          {transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)}) == 24);
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("A3")).order() == 24);

	// B_n as signed permutations (flip on the first coordinate, then swaps)
	CHECK(permutation_group_order({signed_flip(2, 0), signed_swap(2, 0, 1)}) == 8);
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("B2")).order() == 8);
	CHECK(permutation_group_order(
	          {signed_flip(3, 0), signed_swap(3, 0, 1), signed_swap(3, 1, 2)}) == 48);
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("B3")).order() == 48);
}

TEST_CASE("standard data for the named types")
{
	struct Row
	{
		const char* type;
		int order, positive_roots;
	};
	// orders are the products of the degrees; root counts standard
	for (const Row& r : {Row{"A2", 6, 3}, {"B2", 8, 4}, {"G2", 12, 6}, {"F4", 1152, 24},
	                     {"H3", 120, 15}, {"A1xA1", 4, 2}, {"B2xA1", 16, 5}, {"I2_10", 20, 10}})
	{
		CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type(r.type));
		CHECK(g.order() == r.order);
		CHECK(g.positive_roots() == r.positive_roots);
		g.verify_invariants();
	}
}

TEST_CASE("B2 reflection classes are {s,tst} and {t,sts}")
{
	CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type("B2"));
	REQUIRE(g.reflection_classes().size() == 2);
	auto words = [&](int cls) {
		std::set<std::string> out;
		for (int r : g.reflection_classes()[cls])
			out.insert(g.word_str(g.reflection_elem(r)));
		return out;
	};
	CHECK(words(0) == std::set<std::string>{"s", "tst"});
	CHECK(words(1) == std::set<std::string>{"t", "sts"});
}

TEST_CASE("products, inverses and lengths")
{
	CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type("B2"));
	int s = g.gen_elem(0), t = g.gen_elem(1);
	CHECK(g.product(s, g.identity()) == s);
	CHECK(g.product(s, g.inverse(s)) == g.identity());
	CHECK(g.length(g.product(s, t)) == 2);
	for (int w = 0; w < g.order(); ++w)
	{
		CHECK(g.product(w, g.inverse(w)) == g.identity());
		CHECK(static_cast<int>(mask_size(g.inversion_set(w))) == g.length(w));
	}
	// inversion sets: identity empty, longest element full
	CHECK(g.inversion_set(g.identity()) == 0);
	CHECK(g.inversion_set(g.longest_element()) == g.all_reflections_mask());
	// the recursive description of N(sw)
	for (int w = 0; w < g.order(); ++w)
		for (unsigned gen = 0; gen < g.rank(); ++gen)
		{
			int sw = g.left_gen(w, gen);
			int img = g.apply(g.inverse(w), gen + 1);
			if (g.length(sw) > g.length(w))
				CHECK(g.inversion_set(sw) == (g.inversion_set(w) | root_bit(img - 1)));
			else
				CHECK(g.inversion_set(sw) == (g.inversion_set(w) & ~root_bit(-img - 1)));
		}
}

TEST_CASE("word parsing")
{
	CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type("G2"));
	CHECK(g.element_of_word("e") == g.identity());
	CHECK(g.element_of_word("ststst") == g.longest_element());
	CHECK(g.element_of_word("ss") == g.identity());
	CHECK_THROWS_AS(g.element_of_word("xyz"), std::invalid_argument);
	CoxeterGroup f4 = CoxeterGroup::build(CoxeterMatrix::of_type("F4"));
	CHECK(f4.element_of_word("s1s2s1") == f4.element_of_word("s2s1s2"));
}

TEST_CASE("reflection subgroups and minimal coset representatives")
{
	CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type("I2_8"));
	// I = {} and I = T
	auto none = g.reflection_subgroup(0);
	CHECK(none.group_order() == 1);
	CHECK(none.coset_reps.size() == std::size_t(g.order()));
	auto all = g.reflection_subgroup(g.all_reflections_mask());
	CHECK(all.group_order() == g.order());
	CHECK(all.coset_reps == std::vector<int>{g.identity()});
	// I = S generates the whole group as well
	auto simple = g.reflection_subgroup(g.simple_mask());
	CHECK(simple.group_order() == g.order());
	CHECK(simple.coset_reps == std::vector<int>{g.identity()});
	// X_{t,sts} = {e, s}
	RootMask I = root_bit(g.reflection_root(g.element_of_word("t"))) |
	             root_bit(g.reflection_root(g.element_of_word("sts")));
	auto sub = g.reflection_subgroup(I);
	CHECK(sub.coset_reps ==
	      std::vector<int>{g.identity(), g.gen_elem(0)});
	CHECK(sub.coset_reps.size() * sub.elements.size() == std::size_t(g.order()));
	// |X_I| |W_I| = |W| over every singleton and pair
	for (int a = 0; a < g.positive_roots(); ++a)
		for (int b = a; b < g.positive_roots(); ++b)
		{
			auto s2 = g.reflection_subgroup(root_bit(a) | root_bit(b));
			CHECK(s2.coset_reps.size() * s2.elements.size() == std::size_t(g.order()));
			// each rep is the strict length minimum of its coset
			for (int x : s2.coset_reps)
				for (int u : s2.elements)
					if (u != g.identity())
						CHECK(g.length(g.product(x, u)) > g.length(x));
		}
}

TEST_CASE("diagram components")
{
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("A1xA1")).components().size() == 2);
	CHECK(CoxeterGroup::build(CoxeterMatrix::of_type("B2")).components().size() == 1);
	auto comps = CoxeterGroup::build(CoxeterMatrix::of_type("B2xA1")).components();
	REQUIRE(comps.size() == 2);
	CHECK(comps[0].size() == 2);
	CHECK(comps[1].size() == 1);
}

TEST_CASE("build error paths")
{
	CoxeterMatrix inf(2);
	inf.set_bond(0, 1, kInfiniteBond);
	CHECK_THROWS_AS(CoxeterGroup::build(inf), std::invalid_argument);

	CoxeterMatrix big(2);
	big.set_bond(0, 1, 1000);
	CHECK_THROWS_WITH_AS(CoxeterGroup::build(big, 10), doctest::Contains("max_roots"),
	                     std::runtime_error);

	CoxeterMatrix bad(2);
	bad.set_bond(0, 1, 4);
	bad.entries[1 * 2 + 0] = 3; // break symmetry
	CHECK_THROWS_AS(CoxeterGroup::build(bad), std::invalid_argument);
}

TEST_CASE("cache round-trip and tamper rejection")
{
	CoxeterGroup g = CoxeterGroup::build(CoxeterMatrix::of_type("B3"));
	std::string doc = group_to_cache_json(g);
	CoxeterGroup loaded = group_from_cache_json(doc);
	CHECK(loaded.order() == g.order());
	CHECK(loaded.longest_element() == g.longest_element());
	for (int w = 0; w < g.order(); ++w)
		CHECK(loaded.word(w) == g.word(w));

	// flip one permutation entry: the loader must notice
	std::string tampered = doc;
	auto pos = tampered.find("\"perm\":[1");
	REQUIRE(pos != std::string::npos);
	tampered[pos + 8] = '2';
	CHECK_THROWS_AS(group_from_cache_json(tampered), std::exception);
}

TEST_CASE("load_or_build round-trips through a cache directory")
{
	namespace fs = std::filesystem;
	fs::path tmp = fs::temp_directory_path() / "coxdesc_cache_test";
	fs::remove_all(tmp);
	CoxeterMatrix m = CoxeterMatrix::of_type("B2");
	CoxeterGroup first = load_or_build_group(m, tmp.string());
	fs::path file = tmp / ("group-" + m.fingerprint() + ".json");
	REQUIRE(fs::exists(file));
	CoxeterGroup second = load_or_build_group(m, tmp.string());
	CHECK(second.order() == first.order());
	// a corrupted cache is rebuilt silently
	{
		std::ofstream out(file);
		out << "{\"format\": \"garbage\"}";
	}
	CoxeterGroup third = load_or_build_group(m, tmp.string());
	CHECK(third.order() == 8);
	// and the rebuild restored a loadable file
	std::ifstream in(file);
	std::string text((std::istreambuf_iterator<char>(in)), {});
	CHECK(group_from_cache_json(text).order() == 8);
	fs::remove_all(tmp);
}

TEST_CASE("fingerprints are stable and distinguish matrices")
{
	auto a = CoxeterMatrix::of_type("B2").fingerprint();
	auto b = CoxeterMatrix::of_type("B2").fingerprint();
	auto c = CoxeterMatrix::of_type("A2").fingerprint();
	CHECK(a == b);
	CHECK(a != c);
}
