#pragma once

#include "coxdesc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace coxdesc {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Z-lattice given by a row-echelon integer basis (pivot columns strictly
// increasing). All basis updates are unimodular row operations, so the row
// span is preserved exactly; membership reduces a vector by divisibility at
// the pivots. canonical() turns the basis into the Hermite normal form.
class IntegerLattice
{
public:
	explicit IntegerLattice(std::size_t dim) : dim_(dim) {}

	std::size_t dim() const { return dim_; }
	int rank() const { return static_cast<int>(rows_.size()); }
	const IntMat& rows() const { return rows_; }
	const std::vector<int>& pivots() const { return pivots_; }

	// Adds v to the lattice; returns true if the lattice grew or any basis row
	// changed (i.e. v was not already a member).
	bool insert(IntVec v);
	bool contains(const IntVec& v) const;
	bool contains(const IntegerLattice& other) const;
	bool same_lattice(const IntegerLattice& other) const;

	// Hermite normal form: positive pivots, entries above each pivot reduced
	// into [0, pivot). Canonical per lattice, so equal lattices compare equal.
	void canonicalize();

private:
	std::size_t dim_;
	IntMat rows_;
	std::vector<int> pivots_;
};

// Rank of a rational matrix (rows need not have equal length padding; they must).
int rational_rank(RatMat m);

// Basis of { x : x M = 0 } (left null space, coefficients on the rows).
RatMat rational_left_nullspace(const RatMat& m);

// Coefficients c with c M = target, if target lies in the row space.
// When the rows are linearly independent the solution is unique.
std::optional<RatVec> solve_in_rowspace(const RatMat& m, const RatVec& target);

// Z-basis of { v : v M = 0 } via unimodular row reduction of [M | I].
IntMat integer_left_kernel(const IntMat& m);

} // namespace coxdesc
