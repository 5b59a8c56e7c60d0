#include "coxdesc/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxdesc {

static int leading_index(const IntVec& v)
{
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0)
			return static_cast<int>(i);
	return -1;
}

bool IntegerLattice::insert(IntVec v)
{
	if (v.size() != dim_)
		throw std::invalid_argument("IntegerLattice::insert: dimension mismatch");
	bool changed = false;
	for (std::size_t r = 0; r < rows_.size(); ++r)
	{
		int p = pivots_[r];
		if (v[p] == 0)
			continue;
		IntVec& row = rows_[r];
		BigInt rem;
		mpz_tdiv_r(rem.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
		if (rem == 0)
		{
			BigInt q = v[p] / row[p];
			for (std::size_t i = p; i < dim_; ++i)
				v[i] -= q * row[i];
		}
		else
		{
			// Unimodular 2x2 update: [new_row; new_v] = U [row; v], det U = 1.
			BigInt g, a, b;
			mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), row[p].get_mpz_t(),
			           v[p].get_mpz_t());
			BigInt rq = row[p] / g, vq = v[p] / g;
			for (std::size_t i = p; i < dim_; ++i)
			{
				BigInt nr = a * row[i] + b * v[i];
				BigInt nv = rq * v[i] - vq * row[i];
				row[i] = nr;
				v[i] = nv;
			}
			changed = true;
		}
	}
	int lead = leading_index(v);
	if (lead < 0)
		return changed;
	// Insert keeping pivot columns strictly increasing.
	auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
	std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
	pivots_.insert(pos, lead);
	rows_.insert(rows_.begin() + idx, std::move(v));
	return true;
}

bool IntegerLattice::contains(const IntVec& v) const
{
	if (v.size() != dim_)
		throw std::invalid_argument("IntegerLattice::contains: dimension mismatch");
	IntVec w = v;
	for (std::size_t r = 0; r < rows_.size(); ++r)
	{
		int p = pivots_[r];
		if (w[p] == 0)
			continue;
		const IntVec& row = rows_[r];
		BigInt q, rem;
		mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[p].get_mpz_t(), row[p].get_mpz_t());
		if (rem != 0)
			return false;
		for (std::size_t i = p; i < dim_; ++i)
			w[i] -= q * row[i];
	}
	return leading_index(w) < 0;
}

bool IntegerLattice::contains(const IntegerLattice& other) const
{
	for (const auto& row : other.rows_)
		if (!contains(row))
			return false;
	return true;
}

bool IntegerLattice::same_lattice(const IntegerLattice& other) const
{
	return dim_ == other.dim_ && rank() == other.rank() && contains(other) && other.contains(*this);
}

void IntegerLattice::canonicalize()
{
	for (std::size_t r = 0; r < rows_.size(); ++r)
	{
		if (rows_[r][pivots_[r]] < 0)
			for (auto& x : rows_[r])
				x = -x;
	}
	// Reduce entries above each pivot into [0, pivot).
	for (std::size_t r = 0; r < rows_.size(); ++r)
	{
		for (std::size_t below = r + 1; below < rows_.size(); ++below)
		{
			int p = pivots_[below];
			BigInt q;
			mpz_fdiv_q(q.get_mpz_t(), rows_[r][p].get_mpz_t(), rows_[below][p].get_mpz_t());
			if (q == 0)
				continue;
			for (std::size_t i = p; i < dim_; ++i)
				rows_[r][i] -= q * rows_[below][i];
		}
	}
}

int rational_rank(RatMat m)
{
	int rank = 0;
	std::size_t cols = m.empty() ? 0 : m[0].size();
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < m.size(); ++col)
	{
		std::size_t piv = row;
		while (piv < m.size() && m[piv][col] == 0)
			++piv;
		if (piv == m.size())
			continue;
		std::swap(m[row], m[piv]);
		for (std::size_t i = row + 1; i < m.size(); ++i)
		{
			if (m[i][col] == 0)
				continue;
			Rat f = m[i][col] / m[row][col];
			for (std::size_t j = col; j < cols; ++j)
				m[i][j] -= f * m[row][j];
		}
		++row;
		++rank;
	}
	return rank;
}

RatMat rational_left_nullspace(const RatMat& m)
{
	// Row-reduce the augmented matrix [M | I]; rows whose M-part vanishes give
	// the left kernel coefficients.
	std::size_t nrows = m.size();
	std::size_t cols = nrows ? m[0].size() : 0;
	RatMat aug(nrows, RatVec(cols + nrows, Rat(0)));
	for (std::size_t i = 0; i < nrows; ++i)
	{
		for (std::size_t j = 0; j < cols; ++j)
			aug[i][j] = m[i][j];
		aug[i][cols + i] = 1;
	}
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < nrows; ++col)
	{
		std::size_t piv = row;
		while (piv < nrows && aug[piv][col] == 0)
			++piv;
		if (piv == nrows)
			continue;
		std::swap(aug[row], aug[piv]);
		for (std::size_t i = 0; i < nrows; ++i)
		{
			if (i == row || aug[i][col] == 0)
				continue;
			Rat f = aug[i][col] / aug[row][col];
			for (std::size_t j = col; j < cols + nrows; ++j)
				aug[i][j] -= f * aug[row][j];
		}
		++row;
	}
	RatMat kernel;
	for (std::size_t i = row; i < nrows; ++i)
		kernel.emplace_back(aug[i].begin() + cols, aug[i].end());
	return kernel;
}

std::optional<RatVec> solve_in_rowspace(const RatMat& m, const RatVec& target)
{
	// Solve c M = target by reducing [M^T | target^T] column-style: build the
	// transpose system M^T c^T = target^T with ordinary Gaussian elimination.
	std::size_t nrows = m.size();
	std::size_t cols = nrows ? m[0].size() : 0;
	if (target.size() != cols)
		throw std::invalid_argument("solve_in_rowspace: size mismatch");
	RatMat aug(cols, RatVec(nrows + 1, Rat(0)));
	for (std::size_t i = 0; i < cols; ++i)
	{
		for (std::size_t j = 0; j < nrows; ++j)
			aug[i][j] = m[j][i];
		aug[i][nrows] = target[i];
	}
	std::vector<int> pivot_of_col(nrows, -1);
	std::size_t row = 0;
	for (std::size_t col = 0; col < nrows && row < cols; ++col)
	{
		std::size_t piv = row;
		while (piv < cols && aug[piv][col] == 0)
			++piv;
		if (piv == cols)
			continue;
		std::swap(aug[row], aug[piv]);
		for (std::size_t i = 0; i < cols; ++i)
		{
			if (i == row || aug[i][col] == 0)
				continue;
			Rat f = aug[i][col] / aug[row][col];
			for (std::size_t j = col; j <= nrows; ++j)
				aug[i][j] -= f * aug[row][j];
		}
		pivot_of_col[col] = static_cast<int>(row);
		++row;
	}
	// Inconsistent if a zero row has nonzero rhs.
	for (std::size_t i = row; i < cols; ++i)
		if (aug[i][nrows] != 0)
			return std::nullopt;
	RatVec solution(nrows, Rat(0));
	for (std::size_t col = 0; col < nrows; ++col)
	{
		int r = pivot_of_col[col];
		if (r >= 0)
			solution[col] = aug[r][nrows] / aug[r][col];
	}
	return solution;
}

IntMat integer_left_kernel(const IntMat& m)
{
	std::size_t nrows = m.size();
	std::size_t cols = nrows ? m[0].size() : 0;
	IntMat aug(nrows, IntVec(cols + nrows, BigInt(0)));
	for (std::size_t i = 0; i < nrows; ++i)
	{
		for (std::size_t j = 0; j < cols; ++j)
			aug[i][j] = m[i][j];
		aug[i][cols + i] = 1;
	}
	// Unimodular row echelon on the M-part only.
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < nrows; ++col)
	{
		// gcd-combine all rows below `row` in this column.
		while (true)
		{
			std::size_t nonzero = nrows;
			for (std::size_t i = row; i < nrows; ++i)
				if (aug[i][col] != 0)
				{
					nonzero = i;
					break;
				}
			if (nonzero == nrows)
				break;
			std::swap(aug[row], aug[nonzero]);
			bool reduced = true;
			for (std::size_t i = row + 1; i < nrows; ++i)
			{
				if (aug[i][col] == 0)
					continue;
				BigInt q, rem;
				mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), aug[i][col].get_mpz_t(),
				            aug[row][col].get_mpz_t());
				for (std::size_t j = 0; j < cols + nrows; ++j)
					aug[i][j] -= q * aug[row][j];
				if (aug[i][col] != 0)
					reduced = false;
			}
			if (reduced)
				break;
			// Smaller residues moved below the pivot; iterate (Euclid on the column).
			std::size_t best = row;
			for (std::size_t i = row + 1; i < nrows; ++i)
				if (aug[i][col] != 0 &&
				    (aug[best][col] == 0 || cmp(abs(aug[i][col]), abs(aug[best][col])) < 0))
					best = i;
			if (best != row)
				std::swap(aug[row], aug[best]);
		}
		if (aug[row][col] != 0)
			++row;
	}
	IntMat kernel;
	for (std::size_t i = row; i < nrows; ++i)
	{
		bool zero = true;
		for (std::size_t j = 0; j < cols; ++j)
			if (aug[i][j] != 0)
			{
				zero = false;
				break;
			}
		if (!zero)
			throw std::logic_error("integer_left_kernel: echelon failed");
		kernel.emplace_back(aug[i].begin() + cols, aug[i].end());
	}
	return kernel;
}

} // namespace coxdesc
