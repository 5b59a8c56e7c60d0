#pragma once

#include "coxdesc/coxeter.hpp"

#include <optional>
#include <span>
#include <utility>

namespace coxdesc {

// D_A(w) = { t in A : l(w t) < l(w) } as a root mask; computed through the
// root action (t_alpha in A with w(alpha) negative), which agrees with the
// length definition (asserted in debug builds).
RootMask descent_mask(const CoxeterGroup& g, RootMask A, int w);

// N_A(w): positive roots alpha with t_alpha in A and w(alpha) negative.
inline RootMask restricted_inversion_set(const CoxeterGroup& g, RootMask A, int w)
{
	return g.inversion_set(w) & A;
}

struct DescentClass
{
	RootMask descents = 0;     // the realized subset I of A
	std::vector<int> elements; // ShortLex order
	int min_rep = -1;          // ShortLex-least member (z_I)
};

// The partition of W into descent classes for a fixed A, with the family of
// realized descent subsets in a deterministic order (by size, then mask).
class DescentTable
{
public:
	static DescentTable build(const CoxeterGroup& g, RootMask A);

	const CoxeterGroup& group() const { return *g_; }
	RootMask subset() const { return A_; }
	int class_count() const { return static_cast<int>(classes_.size()); }
	const DescentClass& cls(int k) const { return classes_[k]; }
	int class_of(int w) const { return class_of_[w]; }
	RootMask descents_of(int w) const { return descent_of_[w]; }
	std::optional<int> class_index(RootMask I) const;
	bool subset_contains_generators() const;

private:
	const CoxeterGroup* g_ = nullptr;
	RootMask A_ = 0;
	std::vector<RootMask> descent_of_;
	std::vector<DescentClass> classes_;
	std::vector<int> class_of_;
};

// Classes of the reflexive-transitive closure of the neighborhood relation
// w ~ sw whenever w^{-1} s w is outside A. Must coincide with the descent
// class partition.
std::vector<std::vector<int>> descent_equivalence_classes(const CoxeterGroup& g, RootMask A);

// Connectivity of E under left multiplication by generators.
bool left_connected(const CoxeterGroup& g, std::span<const int> elems);

struct StabilityWitness
{
	int refl_root; // r in A (root index)
	int elem;      // w with w^{-1} r w outside A and D_A(rw) != D_A(w)
};

// A is descent-stable when conjugating a member of A out of A by left
// multiplication never changes the descent set: for every r in A and w with
// w^{-1} r w outside A, D_A(rw) = D_A(w). Returns the first violation in
// (reflection index, ShortLex) order, or nullopt. The parallel version
// returns the identical witness.
std::optional<StabilityWitness> descent_stability_violation_serial(const CoxeterGroup& g,
                                                                   RootMask A);
std::optional<StabilityWitness> descent_stability_violation(const CoxeterGroup& g, RootMask A,
                                                            int threads);
inline bool is_descent_stable(const CoxeterGroup& g, RootMask A, int threads = 1)
{
	return !descent_stability_violation(g, A, threads).has_value();
}

// The involution on W x W used to transport factorizations: if u ~ su (i.e.
// u^{-1} s u outside A) the pair (u,v) maps to (su, v), otherwise to
// (u, (u^{-1}su) v). Applying it twice is the identity.
std::pair<int, int> factorization_involution(const CoxeterGroup& g, RootMask A, unsigned s,
                                             std::pair<int, int> uv);

// A = S1 union of full reflection classes of the members of S2 (S1, S2 given
// as generator-index bitmasks over 0..rank-1).
RootMask class_union_set(const CoxeterGroup& g, unsigned s1_gens, unsigned s2_gens);
// Whether A has that shape for some S1, S2.
bool is_class_union_form(const CoxeterGroup& g, RootMask A);

} // namespace coxdesc
