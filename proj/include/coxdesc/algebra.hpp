#pragma once

#include "coxdesc/descent.hpp"
#include "coxdesc/lattice.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace coxdesc {

// Element of the group algebra with exact coefficients, in canonical sparse
// form (no explicit zeros).
struct GroupAlgebraVector
{
	std::map<int, Rat> coeffs;

	static GroupAlgebraVector basis_element(int w, Rat c = Rat(1));
	static GroupAlgebraVector from_elements(std::span<const int> elems);

	bool is_zero() const { return coeffs.empty(); }
	bool is_integral() const;
	Rat coeff(int w) const;
	void add(int w, const Rat& c);
	GroupAlgebraVector& operator+=(const GroupAlgebraVector& o);
	GroupAlgebraVector& operator-=(const GroupAlgebraVector& o);
	GroupAlgebraVector& operator*=(const Rat& c);
	friend GroupAlgebraVector operator+(GroupAlgebraVector a, const GroupAlgebraVector& b)
	{
		return a += b;
	}
	friend GroupAlgebraVector operator-(GroupAlgebraVector a, const GroupAlgebraVector& b)
	{
		return a -= b;
	}
	friend GroupAlgebraVector operator*(const Rat& c, GroupAlgebraVector a) { return a *= c; }
	bool operator==(const GroupAlgebraVector& o) const { return coeffs == o.coeffs; }

	RatVec dense(int order) const;
	IntVec dense_int(int order) const; // throws when not integral
	std::string str(const CoxeterGroup& g) const;
};

// Exact group-algebra product via element products.
GroupAlgebraVector convolve(const CoxeterGroup& g, const GroupAlgebraVector& a,
                            const GroupAlgebraVector& b);

// Counting coefficients of (sum over a_elems) * (sum over b_elems).
std::vector<long long> convolve_counts(const CoxeterGroup& g, std::span<const int> a_elems,
                                       std::span<const int> b_elems);

// --- descent algebra -------------------------------------------------------

struct ClosureWitness
{
	int i = -1, j = -1;  // basis pair whose product escapes
	int elem = -1;       // offending group element (constancy violation)
};

struct DescentAlgebra
{
	int rank = 0;
	bool closed = false;
	std::optional<ClosureWitness> witness;
	bool has_unit = false;
	// counting route |D_A(I,J,z_K)| agreed with the convolution route on every
	// (I,J,K); meaningful when closed
	bool counting_matches_convolution = false;
	// structure-constant tensor c[i][j][k], materialized when class_count is
	// small (or on demand through structure_rows)
	std::vector<std::vector<std::vector<long long>>> tensor;
	bool tensor_available = false;
};

// Decides closure (products constant on every descent class), checks the
// counting route against the convolution route, and materializes the tensor
// when class_count <= materialize_limit. Deterministic first witness.
DescentAlgebra descent_algebra(const CoxeterGroup& g, const DescentTable& table, int threads = 1,
                               int materialize_limit = 64);
DescentAlgebra descent_algebra_serial(const CoxeterGroup& g, const DescentTable& table,
                                      int materialize_limit = 64);

// |D_A(I,J,z_K)|: factorizations z_K = u v with u in class I, v in class J.
long long structure_constant(const CoxeterGroup& g, const DescentTable& table, int I, int J,
                             int K);
// Streams one row k -> c[i][j][k] per ordered pair (i,j); requires closed.
void structure_rows(const CoxeterGroup& g, const DescentTable& table,
                    const std::function<void(int, int, const std::vector<long long>&)>& sink);

// --- coset-sum module (the span of the x_I) --------------------------------

struct CosetModuleEntry
{
	RootMask subset_rep = 0;         // I with W_I intersect A = I (canonical index)
	RootMask reflection_content = 0; // T intersect W_I
	std::vector<int> subgroup;       // elements of W_I
	std::vector<int> coset_reps;     // X_I
};

struct CosetModule
{
	RootMask A = 0;
	std::vector<CosetModuleEntry> entries;
	IntegerLattice lattice{0};
	int rank = 0;
	bool p0_is_basis = false; // the x_I over the canonical index family are independent
	bool closed = false;
	std::optional<std::pair<int, int>> violation; // first product outside the span
	bool contained_in_descent_algebra = false;
	bool has_unit = false;

	IntVec x_vector(int entry, int order) const;
	std::optional<int> entry_index(RootMask subset_rep) const;
};

// Enumerates all subsets of A deduplicated by their subgroup (equivalently:
// indexed by the family { I subset A : W_I intersect A = I }), spans the
// lattice, and decides multiplicative closure by lattice membership of all
// pairwise generator products. Throws a budget error when 2^|A| or the
// deduplicated family exceeds the budget.
CosetModule coset_module(const CoxeterGroup& g, RootMask A, std::size_t budget = 1 << 16,
                         int threads = 1);

// Span of x_I - x_J over pairs with conjugate subgroups (within the canonical
// index family of `module`).
struct DifferenceModule
{
	std::vector<std::pair<int, int>> pairs; // entry indices, conjugate subgroups
	IntegerLattice lattice{0};
	int rank = 0;
};
DifferenceModule coset_difference_module(const CoxeterGroup& g, const CosetModule& module);

// --- class functions and the theta map -------------------------------------

struct ClassFunction
{
	std::vector<Rat> values; // indexed by conjugacy class
	bool operator==(const ClassFunction& o) const { return values == o.values; }
	ClassFunction& operator+=(const ClassFunction& o);
	ClassFunction& operator-=(const ClassFunction& o);
	friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
	friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
	// pointwise product (product of characters)
	friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
	ClassFunction scaled(const Rat& c) const;
	bool is_zero() const;
};

Rat evaluate_at(const CoxeterGroup& g, const ClassFunction& f, int elem);

// Character of the trivial module induced from the subgroup with the given
// membership bitmap: value at the class of w is
// |{ x : x^{-1} w x in H }| / |H| (always a nonnegative integer; asserted).
ClassFunction induced_trivial(const CoxeterGroup& g, const std::vector<std::uint8_t>& member,
                              int subgroup_order);
// Convenience: from a reflection subset I (builds W_I first).
ClassFunction induced_trivial(const CoxeterGroup& g, RootMask I);
// The regular character (|W| at the identity class, 0 elsewhere).
ClassFunction regular_character(const CoxeterGroup& g);

struct ThetaMap
{
	enum class Status { morphism, not_morphism, undefined };
	Status status = Status::undefined;
	std::string reason; // set when undefined
	struct MorphismWitness
	{
		int i, j;       // entry pair
		int class_index;
	};
	std::optional<MorphismWitness> witness;
	std::vector<ClassFunction> images; // per CosetModule entry
	bool well_defined = false;         // linear relations map to relations
	IntMat kernel;                     // Z-basis, coordinates in entry order
};

ThetaMap theta_map(const CoxeterGroup& g, const CosetModule& module);

// --- radical ----------------------------------------------------------------

struct RadicalResult
{
	std::vector<GroupAlgebraVector> basis; // basis of the radical
	RatMat coords;                         // same, in the presentation basis
	int dimension = 0;
	bool nilpotency_verified = false;
};

// Jacobson radical of the Q-span of `basis` (must be linearly independent,
// multiplicatively closed, and contain the group identity), via the kernel of
// the trace form of the left-regular representation; nilpotency is verified.
RadicalResult radical_of_span(const CoxeterGroup& g, const std::vector<GroupAlgebraVector>& basis);

// --- direct products ---------------------------------------------------------

// For a disconnected diagram, verifies that descent classes, the admissible
// family, and structure constants all factor through W = W_1 x W_2 (first
// diagram component against the rest). Throws on a connected diagram.
bool tensor_factorization_check(const CoxeterGroup& g, RootMask A);

} // namespace coxdesc
