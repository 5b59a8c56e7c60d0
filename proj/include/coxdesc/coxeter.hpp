#pragma once

#include "coxdesc/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coxdesc {

// Subset of positive roots / reflections (the build guards |Phi+| <= 64).
using RootMask = std::uint64_t;

inline RootMask root_bit(int i) { return RootMask(1) << i; }
inline bool has_root(RootMask m, int i) { return (m >> i) & 1u; }
inline int mask_size(RootMask m) { return __builtin_popcountll(m); }

template <typename F> inline void for_each_root(RootMask m, F&& f)
{
	while (m)
	{
		int i = __builtin_ctzll(m);
		f(i);
		m &= m - 1;
	}
}

std::vector<int> mask_to_list(RootMask m);
RootMask list_to_mask(std::span<const int> v);

struct CoxeterMatrix
{
	unsigned rank = 0;
	std::vector<unsigned> entries; // rank*rank, m(i,j); kInfiniteBond = infinity
	std::vector<std::string> labels;

	CoxeterMatrix() = default;
	explicit CoxeterMatrix(unsigned rank_);

	unsigned m(unsigned i, unsigned j) const { return entries[i * rank + j]; }
	void set_bond(unsigned i, unsigned j, unsigned v);

	// Named types: "A2", "B3", "D4", "F4", "G2", "H3", "H4", "E6", "I2_8" (or
	// "I2(8)"), and direct products joined with "x", e.g. "B2xA1".
	static CoxeterMatrix of_type(const std::string& name);

	void validate() const; // symmetric, 1 on the diagonal, >= 2 off it
	bool finite_bonds() const;
	std::vector<std::vector<unsigned>> diagram_components() const;
	std::string fingerprint() const; // stable content hash
	// lcm of the finite off-diagonal bond orders (1 if there are none)
	unsigned field_conductor() const;
};

// A finite Coxeter group, fully enumerated: root system, elements as signed
// permutations of the positive roots, ShortLex words, reflections, conjugacy
// classes, the longest element. Immutable after build; all queries are
// read-only and safe for concurrent use.
class CoxeterGroup
{
public:
	CoxeterGroup() = default; // empty shell; use build()

	static CoxeterGroup build(const CoxeterMatrix& matrix, std::size_t max_roots = 10000);

	const CoxeterMatrix& matrix() const { return matrix_; }
	const Field& field() const { return field_; }
	unsigned rank() const { return matrix_.rank; }

	// --- roots ---
	int positive_roots() const { return n_pos_; }
	const std::vector<FieldElement>& root_coords(int i) const { return roots_[i]; }
	// image of the signed root (+-(i+1)) under element w, as a signed root
	int apply(int w, int signed_root) const;
	// image of positive root i under w: signed (i+1)-convention
	int root_image(int w, int i) const { return perms_[w][i]; }

	// --- elements ---
	int order() const { return static_cast<int>(perms_.size()); }
	int identity() const { return 0; }
	int length(int w) const { return lengths_[w]; }
	const std::vector<std::uint8_t>& word(int w) const { return words_[w]; }
	std::string word_str(int w) const;
	int gen_elem(unsigned s) const { return gen_elem_[s]; }
	int product(int u, int v) const;
	int inverse(int w) const { return inverse_[w]; }
	// x w x^{-1}
	int conjugated(int w, int x) const;
	int right_gen(int w, unsigned s) const { return right_gen_[w * rank() + s]; }
	int left_gen(int w, unsigned s) const { return left_gen_[w * rank() + s]; }
	// N(w) = positive roots sent negative by w; |N(w)| = length(w)
	RootMask inversion_set(int w) const;
	// parse a word over the generator labels ("e" or "" = identity)
	int element_of_word(const std::string& word) const;

	// --- reflections ---
	int reflection_elem(int root) const { return refl_elem_[root]; }
	// -1 when the element is not a reflection
	int reflection_root(int elem) const { return refl_root_[elem]; }
	int reflection_class(int root) const { return refl_class_[root]; }
	const std::vector<std::vector<int>>& reflection_classes() const { return refl_classes_; }
	// class of reflections containing generator s, as a root mask
	RootMask generator_class_mask(unsigned s) const;
	RootMask all_reflections_mask() const;
	RootMask simple_mask() const;
	int longest_element() const { return w0_; }
	// root index of t_a t_b t_a^{-1} (conjugating reflection b by reflection a)
	int conjugate_reflection(int a, int b) const { return refl_conj_[a * n_pos_ + b]; }

	// --- conjugacy classes of W ---
	int class_count() const { return static_cast<int>(class_reps_.size()); }
	int class_of(int w) const { return class_of_[w]; }
	int class_rep(int c) const { return class_reps_[c]; }
	int class_size(int c) const { return class_sizes_[c]; }

	// --- reflection subgroups ---
	struct ReflectionSubgroup
	{
		RootMask generators = 0;         // the requested I
		RootMask reflection_content = 0; // T intersected with W_I
		std::vector<int> elements;       // sorted element indices
		std::vector<std::uint8_t> member;
		std::vector<int> coset_reps;     // X_I in ShortLex order
		bool contains(int w) const { return member[w] != 0; }
		int group_order() const { return static_cast<int>(elements.size()); }
	};
	// Throws std::logic_error if some coset has a non-unique length minimum.
	ReflectionSubgroup reflection_subgroup(RootMask I) const;
	// Closure of I under mutual conjugation inside T.
	RootMask conjugation_closure(RootMask I) const;

	std::vector<std::vector<unsigned>> components() const
	{
		return matrix_.diagram_components();
	}

	// Consistency checks used by the cache loader and the test-suite.
	void verify_invariants() const;

private:
	using Perm = std::vector<std::int16_t>; // entry i: signed (j+1) image of root i

	static Perm compose(const Perm& outer, const Perm& inner);
	int lookup(const Perm& p) const;
	void finish_build(); // tables, reflections, classes, w0 (called after BFS)

	CoxeterMatrix matrix_;
	Field field_;
	int n_pos_ = 0;
	std::vector<std::vector<FieldElement>> roots_;
	std::vector<Perm> perms_;
	std::map<Perm, int> index_;
	std::vector<std::vector<std::uint8_t>> words_;
	std::vector<int> lengths_;
	std::vector<int> parent_of_; // BFS tree parent (word minus last letter)
	std::vector<int> gen_elem_;
	std::vector<int> right_gen_, left_gen_;
	std::vector<int> inverse_;
	std::vector<std::int32_t> mult_; // full table when order <= kMultTableLimit
	std::vector<int> refl_elem_;
	std::vector<int> refl_root_;
	std::vector<int> refl_class_;
	std::vector<std::vector<int>> refl_classes_;
	std::vector<std::int16_t> refl_conj_;
	int w0_ = -1;
	std::vector<int> class_of_, class_reps_, class_sizes_;

	static constexpr int kMultTableLimit = 4096;

	friend struct GroupCacheAccess;
};

// --- serialization (versioned JSON cache, see docs/formats.md) ---
std::string group_to_cache_json(const CoxeterGroup& g);
// Parses and verifies all invariants before returning. Throws on any mismatch.
CoxeterGroup group_from_cache_json(const std::string& text);
// Content-addressed load-or-build in cache_dir ("" = no caching).
CoxeterGroup load_or_build_group(const CoxeterMatrix& m, const std::string& cache_dir);

} // namespace coxdesc
