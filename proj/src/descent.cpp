#include "coxdesc/descent.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#ifdef COXDESC_OPENMP
#include <omp.h>
#endif

namespace coxdesc {

RootMask descent_mask(const CoxeterGroup& g, RootMask A, int w)
{
	RootMask out = 0;
	for_each_root(A, [&](int r) {
		if (g.root_image(w, r) < 0)
			out |= root_bit(r);
	});
#ifndef NDEBUG
	// cross-check against the length definition
	RootMask by_length = 0;
	for_each_root(A, [&](int r) {
		int wt = g.product(w, g.reflection_elem(r));
		if (g.length(wt) < g.length(w))
			by_length |= root_bit(r);
	});
	assert(by_length == out);
#endif
	return out;
}

DescentTable DescentTable::build(const CoxeterGroup& g, RootMask A)
{
	DescentTable t;
	t.g_ = &g;
	t.A_ = A;
	int order = g.order();
	t.descent_of_.resize(order);
	t.class_of_.assign(order, -1);

	std::map<RootMask, int> index;
	std::vector<DescentClass> classes;
	for (int w = 0; w < order; ++w)
	{
		RootMask d = descent_mask(g, A, w);
		t.descent_of_[w] = d;
		auto [it, fresh] = index.try_emplace(d, static_cast<int>(classes.size()));
		if (fresh)
			classes.push_back(DescentClass{d, {}, w});
		classes[it->second].elements.push_back(w);
	}
	// deterministic order: by subset size, then by mask value
	std::vector<int> perm(classes.size());
	std::iota(perm.begin(), perm.end(), 0);
	std::sort(perm.begin(), perm.end(), [&](int a, int b) {
		int sa = mask_size(classes[a].descents), sb = mask_size(classes[b].descents);
		if (sa != sb)
			return sa < sb;
		return classes[a].descents < classes[b].descents;
	});
	t.classes_.reserve(classes.size());
	for (int k : perm)
		t.classes_.push_back(std::move(classes[k]));
	for (int k = 0; k < static_cast<int>(t.classes_.size()); ++k)
		for (int w : t.classes_[k].elements)
			t.class_of_[w] = k;
	return t;
}

std::optional<int> DescentTable::class_index(RootMask I) const
{
	for (int k = 0; k < class_count(); ++k)
		if (classes_[k].descents == I)
			return k;
	return std::nullopt;
}

bool DescentTable::subset_contains_generators() const
{
	return (A_ & g_->simple_mask()) == g_->simple_mask();
}

namespace {

struct UnionFind
{
	std::vector<int> parent;
	explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x)
	{
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(int a, int b)
	{
		a = find(a);
		b = find(b);
		if (a != b)
			parent[std::max(a, b)] = std::min(a, b);
	}
};

} // namespace

std::vector<std::vector<int>> descent_equivalence_classes(const CoxeterGroup& g, RootMask A)
{
	UnionFind uf(g.order());
	for (int w = 0; w < g.order(); ++w)
	{
		for (unsigned s = 0; s < g.rank(); ++s)
		{
			// edge w ~ sw iff w^{-1} s w is outside A
			int conj = g.conjugated(g.gen_elem(s), g.inverse(w));
			int root = g.reflection_root(conj);
			if (!has_root(A, root))
				uf.unite(w, g.left_gen(w, s));
		}
	}
	std::map<int, std::vector<int>> groups;
	for (int w = 0; w < g.order(); ++w)
		groups[uf.find(w)].push_back(w);
	std::vector<std::vector<int>> out;
	out.reserve(groups.size());
	for (auto& [root, members] : groups)
		out.push_back(std::move(members));
	return out;
}

bool left_connected(const CoxeterGroup& g, std::span<const int> elems)
{
	if (elems.empty())
		return true;
	std::map<int, int> pos;
	for (std::size_t i = 0; i < elems.size(); ++i)
		pos[elems[i]] = static_cast<int>(i);
	std::vector<std::uint8_t> seen(elems.size(), 0);
	std::vector<int> stack = {0};
	seen[0] = 1;
	std::size_t visited = 0;
	while (!stack.empty())
	{
		int i = stack.back();
		stack.pop_back();
		++visited;
		for (unsigned s = 0; s < g.rank(); ++s)
		{
			auto it = pos.find(g.left_gen(elems[i], s));
			if (it != pos.end() && !seen[it->second])
			{
				seen[it->second] = 1;
				stack.push_back(it->second);
			}
		}
	}
	return visited == elems.size();
}

std::optional<StabilityWitness> descent_stability_violation_serial(const CoxeterGroup& g,
                                                                   RootMask A)
{
	std::vector<RootMask> descents(g.order());
	for (int w = 0; w < g.order(); ++w)
		descents[w] = descent_mask(g, A, w);
	std::optional<StabilityWitness> out;
	for_each_root(A, [&](int r) {
		if (out)
			return;
		int t = g.reflection_elem(r);
		for (int w = 0; w < g.order(); ++w)
		{
			int conj = g.conjugated(t, g.inverse(w)); // w^{-1} r w
			if (has_root(A, g.reflection_root(conj)))
				continue;
			int rw = g.product(t, w);
			if (descents[rw] != descents[w])
			{
				out = StabilityWitness{r, w};
				return;
			}
		}
	});
	return out;
}

std::optional<StabilityWitness> descent_stability_violation(const CoxeterGroup& g, RootMask A,
                                                            int threads)
{
#ifdef COXDESC_OPENMP
	if (threads > 1)
	{
		std::vector<RootMask> descents(g.order());
		for (int w = 0; w < g.order(); ++w)
			descents[w] = descent_mask(g, A, w);
		std::vector<int> roots = mask_to_list(A);
		long long n = static_cast<long long>(roots.size()) * g.order();
		long long best = n; // global first violation in (reflection, ShortLex) order
#pragma omp parallel num_threads(threads)
		{
			long long local = n;
#pragma omp for schedule(static) nowait
			for (long long k = 0; k < n; ++k)
			{
				if (k >= local)
					continue;
				int r = roots[static_cast<std::size_t>(k / g.order())];
				int w = static_cast<int>(k % g.order());
				int t = g.reflection_elem(r);
				int conj = g.conjugated(t, g.inverse(w));
				if (has_root(A, g.reflection_root(conj)))
					continue;
				if (descents[g.product(t, w)] != descents[w] && k < local)
					local = k;
			}
#pragma omp critical
			best = std::min(best, local);
		}
		if (best == n)
			return std::nullopt;
		return StabilityWitness{roots[static_cast<std::size_t>(best / g.order())],
		                        static_cast<int>(best % g.order())};
	}
#else
	(void)threads;
#endif
	return descent_stability_violation_serial(g, A);
}

std::pair<int, int> factorization_involution(const CoxeterGroup& g, RootMask A, unsigned s,
                                             std::pair<int, int> uv)
{
	auto [u, v] = uv;
	int conj = g.conjugated(g.gen_elem(s), g.inverse(u)); // u^{-1} s u
	if (!has_root(A, g.reflection_root(conj)))
		return {g.left_gen(u, s), v};
	return {u, g.product(conj, v)};
}

RootMask class_union_set(const CoxeterGroup& g, unsigned s1_gens, unsigned s2_gens)
{
	RootMask A = 0;
	for (unsigned s = 0; s < g.rank(); ++s)
	{
		if ((s1_gens >> s) & 1u)
			A |= root_bit(s);
		if ((s2_gens >> s) & 1u)
			A |= g.generator_class_mask(s);
	}
	return A;
}

bool is_class_union_form(const CoxeterGroup& g, RootMask A)
{
	// Union of every full class contained in A; the remainder must consist of
	// simple reflections.
	RootMask covered = 0;
	for (unsigned s = 0; s < g.rank(); ++s)
	{
		RootMask cls = g.generator_class_mask(s);
		if ((A & cls) == cls)
			covered |= cls;
	}
	return (A & ~covered & ~g.simple_mask()) == 0;
}

} // namespace coxdesc
