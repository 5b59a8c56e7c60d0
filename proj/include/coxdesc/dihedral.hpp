#pragma once

#include "coxdesc/algebra.hpp"

#include <array>

namespace coxdesc {

// Dihedral group of order 4m (bond m(s,t) = 2m), wrapping the generic
// enumeration together with the rotation/reflection normal form
// (d, k) <-> r^k s^d with r = st, k mod 2m. The normal-form arithmetic is
// verified against the generic enumeration on construction.
class DihedralGroup
{
public:
	// m >= 2 (the bond order is 2m)
	static DihedralGroup make(int m);

	int m() const { return m_; }
	const CoxeterGroup& group() const { return g_; }

	struct NormalForm
	{
		int refl; // 0 = rotation r^k, 1 = r^k s
		int k;    // mod 2m
	};
	NormalForm normal_form(int elem) const { return forms_[elem]; }
	int element_of(NormalForm f) const;
	static NormalForm multiply(NormalForm a, NormalForm b, int m);
	int rotation(int k) const; // element r^k = (st)^k
	int s() const { return g_.gen_elem(0); }
	int t() const { return g_.gen_elem(1); }
	int w0() const { return g_.longest_element(); }

	// conjugacy class of t (the reflections r^{2k} t), as a root mask
	RootMask class_of_t() const;
	RootMask subset_a() const;                // {s, t, sts}
	RootMask subset_b() const;                // {s} union class of t
	RootMask reflections_from_words(std::initializer_list<const char*> words) const;

private:
	int m_ = 0;
	CoxeterGroup g_;
	std::vector<NormalForm> forms_;
	std::vector<int> elem_of_form_; // (refl*2m + k) -> element
};

// Exact character table of the dihedral group of order 4m: linear characters
// 1, eps, gamma, eps*gamma and two-dimensional chi_i (1 <= i <= m-1) with
// chi_i at a rotation of angle-index j equal to 2cos(i j pi / m) and 0 on
// reflections, held in Q(2cos(pi/m)). Construction verifies orthonormality
// and the induced-from-rotations description of every chi_i.
struct DihedralCharTable
{
	int m = 0;
	Field field; // Q(2cos(pi/m))
	std::vector<std::string> names;
	std::vector<std::vector<FieldElement>> rows; // [irr][conjugacy class]

	int index_of(const std::string& name) const;
	const std::vector<FieldElement>& row(const std::string& name) const
	{
		return rows[index_of(name)];
	}
	std::vector<FieldElement> embed(const ClassFunction& f) const;
	// sum of the chi_i rows
	std::vector<FieldElement> chi_sum() const;

	static DihedralCharTable build(const DihedralGroup& d);
};

// Integer coordinates of a rational class function in the irreducible basis;
// throws when a coordinate fails to be a rational integer.
IntVec irreducible_coordinates(const DihedralGroup& d, const DihedralCharTable& table,
                               const ClassFunction& f);

// Whether the images of `module`'s generators span the full character lattice
// Z^{m+3} (computed in irreducible coordinates).
bool theta_image_spans_character_lattice(const DihedralGroup& d, const DihedralCharTable& table,
                                         const CosetModule& module, const ThetaMap& theta);

// The five orthogonal idempotents of the A = {s,t,sts} subalgebra, with the
// projective dimensions and the separating evaluations. Construction verifies
// idempotency, orthogonality, completeness, the stated dimensions, the
// identity x_sbar E_s = -(1/2)(x_t - x_sts), ev_{f(i)}(E_j) = delta_ij and
// the radical of P_s; any failure throws std::logic_error.
//
// Primitivity follows from the verified data: the algebra has dimension 6
// and radical dimension 1, so its semisimple quotient is a product of five
// one-dimensional blocks; five nonzero orthogonal idempotents summing to 1
// then cannot split further.
struct IdempotentSystem
{
	static constexpr std::array<const char*, 5> kLabels = {"empty", "s", "t", "sbar", "A"};
	std::array<GroupAlgebraVector, 5> idempotents;
	std::array<int, 5> projective_dims{};
	std::array<int, 5> eval_elems{}; // f: empty->e, s->s, t->t, sbar->w0, A->st
	// ev_{f(i)}(E_j)
	std::array<std::array<Rat, 5>, 5> eval_matrix;
};
IdempotentSystem idempotent_system(const DihedralGroup& d);

// --- the infinite dihedral group, at bounded length -------------------------
//
// Elements are alternating words in s, t; roots are integer vectors in the
// basis (alpha_s, alpha_t) of the geometric representation with
// B(alpha_s, alpha_t) = -1, so every test is exact integer arithmetic.

struct InfiniteDihedralReport
{
	std::vector<std::string> subset_words;
	int length_bound = 0;
	long long pairs_checked = 0;
	// (r word, w word) with w^{-1} r w outside A and D_A(rw) != D_A(w)
	std::vector<std::pair<std::string, std::string>> violations;
	bool stable() const { return violations.empty(); }
};

// Checks descent stability of A (a set of reflections given as alternating
// words) over all elements of length <= length_bound.
InfiniteDihedralReport infinite_descent_stability(const std::vector<std::string>& subset_words,
                                                  int length_bound);

// Alternating words of length <= bound (2*bound + 1 of them).
std::vector<std::string> infinite_dihedral_elements(int bound);

} // namespace coxdesc
