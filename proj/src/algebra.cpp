#include "coxdesc/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef COXDESC_OPENMP
#include <omp.h>
#endif

namespace coxdesc {

// ---------------------------------------------------------------------------
// group algebra vectors
// ---------------------------------------------------------------------------

GroupAlgebraVector GroupAlgebraVector::basis_element(int w, Rat c)
{
	GroupAlgebraVector v;
	if (c != 0)
		v.coeffs[w] = std::move(c);
	return v;
}

GroupAlgebraVector GroupAlgebraVector::from_elements(std::span<const int> elems)
{
	GroupAlgebraVector v;
	for (int w : elems)
		v.coeffs[w] += 1;
	return v;
}

bool GroupAlgebraVector::is_integral() const
{
	for (const auto& [w, c] : coeffs)
		if (!is_integer(c))
			return false;
	return true;
}

Rat GroupAlgebraVector::coeff(int w) const
{
	auto it = coeffs.find(w);
	return it == coeffs.end() ? Rat(0) : it->second;
}

void GroupAlgebraVector::add(int w, const Rat& c)
{
	auto it = coeffs.find(w);
	if (it == coeffs.end())
	{
		if (c != 0)
			coeffs.emplace(w, c);
		return;
	}
	it->second += c;
	if (it->second == 0)
		coeffs.erase(it);
}

GroupAlgebraVector& GroupAlgebraVector::operator+=(const GroupAlgebraVector& o)
{
	for (const auto& [w, c] : o.coeffs)
		add(w, c);
	return *this;
}

GroupAlgebraVector& GroupAlgebraVector::operator-=(const GroupAlgebraVector& o)
{
	for (const auto& [w, c] : o.coeffs)
		add(w, -c);
	return *this;
}

GroupAlgebraVector& GroupAlgebraVector::operator*=(const Rat& c)
{
	if (c == 0)
	{
		coeffs.clear();
		return *this;
	}
	for (auto& [w, v] : coeffs)
		v *= c;
	return *this;
}

RatVec GroupAlgebraVector::dense(int order) const
{
	RatVec out(order, Rat(0));
	for (const auto& [w, c] : coeffs)
		out[w] = c;
	return out;
}

IntVec GroupAlgebraVector::dense_int(int order) const
{
	IntVec out(order, BigInt(0));
	for (const auto& [w, c] : coeffs)
	{
		if (!is_integer(c))
			throw std::domain_error("dense_int: vector has non-integer coefficients");
		out[w] = c.get_num();
	}
	return out;
}

std::string GroupAlgebraVector::str(const CoxeterGroup& g) const
{
	if (coeffs.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [w, c] : coeffs)
	{
		if (!first)
			os << " + ";
		if (c != 1)
			os << to_string(c) << "*";
		os << g.word_str(w);
		first = false;
	}
	return os.str();
}

GroupAlgebraVector convolve(const CoxeterGroup& g, const GroupAlgebraVector& a,
                            const GroupAlgebraVector& b)
{
	GroupAlgebraVector out;
	for (const auto& [u, cu] : a.coeffs)
		for (const auto& [v, cv] : b.coeffs)
			out.add(g.product(u, v), cu * cv);
	return out;
}

std::vector<long long> convolve_counts(const CoxeterGroup& g, std::span<const int> a_elems,
                                       std::span<const int> b_elems)
{
	std::vector<long long> out(g.order(), 0);
	for (int u : a_elems)
		for (int v : b_elems)
			++out[g.product(u, v)];
	return out;
}

// ---------------------------------------------------------------------------
// descent algebra
// ---------------------------------------------------------------------------

long long structure_constant(const CoxeterGroup& g, const DescentTable& table, int I, int J,
                             int K)
{
	long long count = 0;
	int z = table.cls(K).min_rep;
	for (int u : table.cls(I).elements)
		if (table.class_of(g.product(g.inverse(u), z)) == J)
			++count;
	return count;
}

namespace {

struct RowScan
{
	bool violated = false;
	int j = -1, elem = -1;
	bool oracle_ok = true;
};

// Scans all products d_I * d_J for one fixed I. counts[K][J] is the counting
// route |D_A(I,J,z_K)| computed in one sweep over D_I.
RowScan scan_row(const CoxeterGroup& g, const DescentTable& table, int I,
                 std::vector<long long>& conv, std::vector<std::vector<long long>>& counts,
                 std::vector<std::vector<std::vector<long long>>>* tensor)
{
	RowScan out;
	int nc = table.class_count();
	int order = g.order();
	for (int K = 0; K < nc; ++K)
		std::fill(counts[K].begin(), counts[K].end(), 0);
	for (int u : table.cls(I).elements)
	{
		int ui = g.inverse(u);
		for (int K = 0; K < nc; ++K)
			++counts[K][table.class_of(g.product(ui, table.cls(K).min_rep))];
	}
	for (int J = 0; J < nc; ++J)
	{
		std::fill(conv.begin(), conv.end(), 0);
		for (int u : table.cls(I).elements)
			for (int v : table.cls(J).elements)
				++conv[g.product(u, v)];
		for (int w = 0; w < order; ++w)
		{
			int K = table.class_of(w);
			if (conv[w] != conv[table.cls(K).min_rep])
			{
				out.violated = true;
				out.j = J;
				out.elem = w;
				return out;
			}
		}
		for (int K = 0; K < nc; ++K)
		{
			if (conv[table.cls(K).min_rep] != counts[K][J])
				out.oracle_ok = false;
			if (tensor)
				(*tensor)[I][J][K] = conv[table.cls(K).min_rep];
		}
	}
	return out;
}

} // namespace

DescentAlgebra descent_algebra_serial(const CoxeterGroup& g, const DescentTable& table,
                                      int materialize_limit)
{
	DescentAlgebra out;
	int nc = table.class_count();
	out.rank = nc;
	out.has_unit = table.cls(table.class_of(g.identity())).elements.size() == 1;
	bool materialize = nc <= materialize_limit;
	if (materialize)
		out.tensor.assign(nc,
		                  std::vector<std::vector<long long>>(nc, std::vector<long long>(nc, 0)));

	std::vector<long long> conv(g.order());
	std::vector<std::vector<long long>> counts(nc, std::vector<long long>(nc, 0));
	out.closed = true;
	out.counting_matches_convolution = true;
	for (int I = 0; I < nc && out.closed; ++I)
	{
		RowScan r = scan_row(g, table, I, conv, counts, materialize ? &out.tensor : nullptr);
		if (r.violated)
		{
			out.closed = false;
			out.witness = ClosureWitness{I, r.j, r.elem};
		}
		if (!r.oracle_ok)
			out.counting_matches_convolution = false;
	}
	if (!out.closed)
	{
		out.tensor.clear();
		out.counting_matches_convolution = false;
		out.tensor_available = false;
	}
	else
		out.tensor_available = materialize;
	return out;
}

DescentAlgebra descent_algebra(const CoxeterGroup& g, const DescentTable& table, int threads,
                               int materialize_limit)
{
#ifdef COXDESC_OPENMP
	if (threads > 1)
	{
		DescentAlgebra out;
		int nc = table.class_count();
		out.rank = nc;
		out.has_unit = table.cls(table.class_of(g.identity())).elements.size() == 1;
		bool materialize = nc <= materialize_limit;
		if (materialize)
			out.tensor.assign(
			    nc, std::vector<std::vector<long long>>(nc, std::vector<long long>(nc, 0)));
		struct Hit
		{
			int i, j, elem;
		};
		std::vector<Hit> hits;
		bool oracle_ok = true;
#pragma omp parallel num_threads(threads)
		{
			std::vector<long long> conv(g.order());
			std::vector<std::vector<long long>> counts(nc, std::vector<long long>(nc, 0));
#pragma omp for schedule(dynamic)
			for (int I = 0; I < nc; ++I)
			{
				RowScan r =
				    scan_row(g, table, I, conv, counts, materialize ? &out.tensor : nullptr);
				if (r.violated)
				{
#pragma omp critical
					hits.push_back(Hit{I, r.j, r.elem});
				}
				if (!r.oracle_ok)
				{
#pragma omp critical
					oracle_ok = false;
				}
			}
		}
		out.closed = hits.empty();
		out.counting_matches_convolution = out.closed && oracle_ok;
		if (!out.closed)
		{
			auto best = std::min_element(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
				return std::tie(a.i, a.j, a.elem) < std::tie(b.i, b.j, b.elem);
			});
			out.witness = ClosureWitness{best->i, best->j, best->elem};
			out.tensor.clear();
			out.tensor_available = false;
		}
		else
			out.tensor_available = materialize;
		return out;
	}
#else
	(void)threads;
#endif
	return descent_algebra_serial(g, table, materialize_limit);
}

void structure_rows(const CoxeterGroup& g, const DescentTable& table,
                    const std::function<void(int, int, const std::vector<long long>&)>& sink)
{
	int nc = table.class_count();
	std::vector<std::vector<long long>> counts(nc, std::vector<long long>(nc, 0));
	std::vector<long long> row(nc);
	for (int I = 0; I < nc; ++I)
	{
		for (int K = 0; K < nc; ++K)
			std::fill(counts[K].begin(), counts[K].end(), 0);
		for (int u : table.cls(I).elements)
		{
			int ui = g.inverse(u);
			for (int K = 0; K < nc; ++K)
				++counts[K][table.class_of(g.product(ui, table.cls(K).min_rep))];
		}
		for (int J = 0; J < nc; ++J)
		{
			for (int K = 0; K < nc; ++K)
				row[K] = counts[K][J];
			sink(I, J, row);
		}
	}
}

// ---------------------------------------------------------------------------
// coset-sum module
// ---------------------------------------------------------------------------

IntVec CosetModule::x_vector(int entry, int order) const
{
	IntVec v(order, BigInt(0));
	for (int w : entries[entry].coset_reps)
		v[w] = 1;
	return v;
}

std::optional<int> CosetModule::entry_index(RootMask subset_rep) const
{
	for (std::size_t i = 0; i < entries.size(); ++i)
		if (entries[i].subset_rep == subset_rep)
			return static_cast<int>(i);
	return std::nullopt;
}

CosetModule coset_module(const CoxeterGroup& g, RootMask A, std::size_t budget, int threads)
{
	CosetModule out;
	out.A = A;
	std::vector<int> a_roots = mask_to_list(A);
	std::size_t na = a_roots.size();
	// 2^|A| subsets are walked below; past 22 bits the walk itself is the problem
	if (na > 22)
		throw std::runtime_error("coset_module: A too large for sigma enumeration");

	// Deduplicate subsets by their subgroup. The mutual-conjugation closure of
	// I determines W_I; T intersect W_I is the exact key.
	std::unordered_map<RootMask, int> by_closure; // closure mask -> entry
	std::unordered_map<RootMask, int> by_content; // T cap W_I -> entry
	std::vector<CosetModuleEntry> entries;
	for (std::size_t mask = 0; mask < (std::size_t(1) << na); ++mask)
	{
		RootMask I = 0;
		for (std::size_t b = 0; b < na; ++b)
			if ((mask >> b) & 1u)
				I |= root_bit(a_roots[b]);
		RootMask closure = g.conjugation_closure(I);
		if (by_closure.count(closure))
			continue;
		auto sub = g.reflection_subgroup(closure);
		auto it = by_content.find(sub.reflection_content);
		if (it != by_content.end())
		{
			by_closure.emplace(closure, it->second);
			continue;
		}
		CosetModuleEntry e;
		e.subset_rep = sub.reflection_content & A;
		e.reflection_content = sub.reflection_content;
		e.subgroup = std::move(sub.elements);
		e.coset_reps = std::move(sub.coset_reps);
		int id = static_cast<int>(entries.size());
		by_closure.emplace(closure, id);
		by_content.emplace(e.reflection_content, id);
		entries.push_back(std::move(e));
		if (entries.size() > budget)
			throw std::runtime_error("coset_module: A too large for sigma enumeration");
	}
	// deterministic order: by |subset_rep|, then mask
	std::sort(entries.begin(), entries.end(),
	          [](const CosetModuleEntry& a, const CosetModuleEntry& b) {
		          int sa = mask_size(a.subset_rep), sb = mask_size(b.subset_rep);
		          if (sa != sb)
			          return sa < sb;
		          return a.subset_rep < b.subset_rep;
	          });
	out.entries = std::move(entries);

	int order = g.order();
	out.lattice = IntegerLattice(order);
	for (std::size_t i = 0; i < out.entries.size(); ++i)
		out.lattice.insert(out.x_vector(static_cast<int>(i), order));
	out.rank = out.lattice.rank();
	out.p0_is_basis = out.rank == static_cast<int>(out.entries.size());

	// containment in the descent algebra span: every x_I constant on classes
	{
		DescentTable table = DescentTable::build(g, A);
		out.contained_in_descent_algebra = true;
		for (std::size_t i = 0; i < out.entries.size() && out.contained_in_descent_algebra; ++i)
		{
			std::vector<std::uint8_t> in_x(order, 0);
			for (int w : out.entries[i].coset_reps)
				in_x[w] = 1;
			for (int w = 0; w < order; ++w)
				if (in_x[w] != in_x[table.cls(table.class_of(w)).min_rep])
				{
					out.contained_in_descent_algebra = false;
					break;
				}
		}
	}

	{
		IntVec unit(order, BigInt(0));
		unit[g.identity()] = 1;
		out.has_unit = out.lattice.contains(unit);
	}

	// multiplicative closure on generator pairs (bilinearity gives the rest)
	int ne = static_cast<int>(out.entries.size());
	auto check_pair = [&](int i, int j) -> bool {
		auto counts = convolve_counts(g, out.entries[i].coset_reps, out.entries[j].coset_reps);
		IntVec v(order);
		for (int w = 0; w < order; ++w)
			v[w] = static_cast<long>(counts[w]);
		return out.lattice.contains(v);
	};
	out.closed = true;
#ifdef COXDESC_OPENMP
	if (threads > 1)
	{
		long long n = static_cast<long long>(ne) * ne;
		long long best = n;
		bool stop = false;
#pragma omp parallel num_threads(threads)
		{
			long long local = n;
#pragma omp for schedule(dynamic, 4)
			for (long long k = 0; k < n; ++k)
			{
				bool skip;
#pragma omp atomic read
				skip = stop;
				if (skip && k >= local)
					continue;
				if (!check_pair(static_cast<int>(k / ne), static_cast<int>(k % ne)))
				{
					if (k < local)
						local = k;
#pragma omp atomic write
					stop = true;
				}
			}
#pragma omp critical
			best = std::min(best, local);
		}
		if (best < n)
		{
			out.closed = false;
			out.violation = {static_cast<int>(best / ne), static_cast<int>(best % ne)};
		}
		return out;
	}
#else
	(void)threads;
#endif
	for (int i = 0; i < ne && out.closed; ++i)
		for (int j = 0; j < ne; ++j)
			if (!check_pair(i, j))
			{
				out.closed = false;
				out.violation = {i, j};
				break;
			}
	return out;
}

DifferenceModule coset_difference_module(const CoxeterGroup& g, const CosetModule& module)
{
	DifferenceModule out;
	int ne = static_cast<int>(module.entries.size());
	int order = g.order();

	// conjugacy of subgroups, decided by brute force over W on the reflection
	// content masks
	auto conjugate_subgroups = [&](int i, int j) {
		RootMask ci = module.entries[i].reflection_content;
		RootMask cj = module.entries[j].reflection_content;
		if (mask_size(ci) != mask_size(cj) ||
		    module.entries[i].subgroup.size() != module.entries[j].subgroup.size())
			return false;
		for (int w = 0; w < order; ++w)
		{
			RootMask image = 0;
			for_each_root(ci, [&](int r) {
				image |= root_bit(g.reflection_root(g.conjugated(g.reflection_elem(r), w)));
			});
			if (image == cj)
				return true;
		}
		return false;
	};

	std::vector<int> rep(ne, -1); // bucket representative
	out.lattice = IntegerLattice(order);
	for (int i = 0; i < ne; ++i)
	{
		bool found = false;
		for (int j = 0; j < i; ++j)
		{
			if (rep[j] == j && conjugate_subgroups(j, i))
			{
				rep[i] = j;
				out.pairs.emplace_back(j, i);
				IntVec v = module.x_vector(j, order);
				IntVec w = module.x_vector(i, order);
				for (int k = 0; k < order; ++k)
					v[k] -= w[k];
				out.lattice.insert(std::move(v));
				found = true;
				break;
			}
		}
		if (!found)
			rep[i] = i;
	}
	out.rank = out.lattice.rank();
	return out;
}

// ---------------------------------------------------------------------------
// class functions
// ---------------------------------------------------------------------------

ClassFunction& ClassFunction::operator+=(const ClassFunction& o)
{
	for (std::size_t i = 0; i < values.size(); ++i)
		values[i] += o.values[i];
	return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o)
{
	for (std::size_t i = 0; i < values.size(); ++i)
		values[i] -= o.values[i];
	return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
	ClassFunction out = a;
	for (std::size_t i = 0; i < out.values.size(); ++i)
		out.values[i] *= b.values[i];
	return out;
}

ClassFunction ClassFunction::scaled(const Rat& c) const
{
	ClassFunction out = *this;
	for (auto& v : out.values)
		v *= c;
	return out;
}

bool ClassFunction::is_zero() const
{
	for (const auto& v : values)
		if (v != 0)
			return false;
	return true;
}

Rat evaluate_at(const CoxeterGroup& g, const ClassFunction& f, int elem)
{
	return f.values[g.class_of(elem)];
}

ClassFunction induced_trivial(const CoxeterGroup& g, const std::vector<std::uint8_t>& member,
                              int subgroup_order)
{
	ClassFunction out;
	out.values.resize(g.class_count());
	for (int c = 0; c < g.class_count(); ++c)
	{
		int rep = g.class_rep(c);
		long long count = 0;
		for (int x = 0; x < g.order(); ++x)
			if (member[g.conjugated(rep, x)])
				++count;
		Rat v = make_rat(BigInt(static_cast<long>(count)), BigInt(subgroup_order));
		if (!is_integer(v))
			throw std::logic_error("induced_trivial: non-integral character value");
		out.values[c] = v;
	}
	return out;
}

ClassFunction induced_trivial(const CoxeterGroup& g, RootMask I)
{
	auto sub = g.reflection_subgroup(I);
	return induced_trivial(g, sub.member, sub.group_order());
}

ClassFunction regular_character(const CoxeterGroup& g)
{
	ClassFunction out;
	out.values.assign(g.class_count(), Rat(0));
	out.values[g.class_of(g.identity())] = Rat(g.order());
	return out;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

ThetaMap theta_map(const CoxeterGroup& g, const CosetModule& module)
{
	ThetaMap out;
	int ne = static_cast<int>(module.entries.size());
	int order = g.order();
	out.images.reserve(ne);
	for (int i = 0; i < ne; ++i)
	{
		std::vector<std::uint8_t> member(order, 0);
		for (int w : module.entries[i].subgroup)
			member[w] = 1;
		out.images.push_back(
		    induced_trivial(g, member, static_cast<int>(module.entries[i].subgroup.size())));
	}

	// linear relations among the x_I must map to relations among the images
	if (module.p0_is_basis)
		out.well_defined = true;
	else
	{
		RatMat xmat(ne, RatVec(order, Rat(0)));
		for (int i = 0; i < ne; ++i)
			for (int w : module.entries[i].coset_reps)
				xmat[i][w] = 1;
		out.well_defined = true;
		for (const auto& rel : rational_left_nullspace(xmat))
		{
			ClassFunction sum;
			sum.values.assign(g.class_count(), Rat(0));
			for (int i = 0; i < ne; ++i)
				if (rel[i] != 0)
					sum += out.images[i].scaled(rel[i]);
			if (!sum.is_zero())
			{
				out.well_defined = false;
				break;
			}
		}
	}

	// integer kernel of the image matrix (coordinates in the entry order)
	{
		IntMat imat(ne, IntVec(g.class_count(), BigInt(0)));
		for (int i = 0; i < ne; ++i)
			for (int c = 0; c < g.class_count(); ++c)
				imat[i][c] = out.images[i].values[c].get_num();
		out.kernel = integer_left_kernel(imat);
	}

	if (!module.p0_is_basis)
	{
		out.status = ThetaMap::Status::undefined;
		out.reason = "x_I not a basis";
		return out;
	}
	if (!module.closed)
	{
		out.status = ThetaMap::Status::undefined;
		out.reason = "sigma not closed";
		return out;
	}

	// morphism test on generator pairs
	RatMat xmat(ne, RatVec(order, Rat(0)));
	for (int i = 0; i < ne; ++i)
		for (int w : module.entries[i].coset_reps)
			xmat[i][w] = 1;
	out.status = ThetaMap::Status::morphism;
	for (int i = 0; i < ne && out.status == ThetaMap::Status::morphism; ++i)
	{
		for (int j = 0; j < ne; ++j)
		{
			auto counts =
			    convolve_counts(g, module.entries[i].coset_reps, module.entries[j].coset_reps);
			RatVec target(order);
			for (int w = 0; w < order; ++w)
				target[w] = Rat(static_cast<long>(counts[w]));
			auto coords = solve_in_rowspace(xmat, target);
			if (!coords)
				throw std::logic_error("theta_map: closed module product escaped the span");
			ClassFunction lhs;
			lhs.values.assign(g.class_count(), Rat(0));
			for (int k = 0; k < ne; ++k)
				if ((*coords)[k] != 0)
					lhs += out.images[k].scaled((*coords)[k]);
			ClassFunction rhs = out.images[i] * out.images[j];
			if (!(lhs == rhs))
			{
				for (int c = 0; c < g.class_count(); ++c)
					if (lhs.values[c] != rhs.values[c])
					{
						out.witness = ThetaMap::MorphismWitness{i, j, c};
						break;
					}
				out.status = ThetaMap::Status::not_morphism;
				break;
			}
		}
	}
	// kernel members must map to zero
	for (const auto& k : out.kernel)
	{
		ClassFunction sum;
		sum.values.assign(g.class_count(), Rat(0));
		for (int i = 0; i < ne; ++i)
			if (k[i] != 0)
				sum += out.images[i].scaled(Rat(k[i]));
		if (!sum.is_zero())
			throw std::logic_error("theta_map: kernel vector with nonzero image");
	}
	return out;
}

// ---------------------------------------------------------------------------
// radical
// ---------------------------------------------------------------------------

RadicalResult radical_of_span(const CoxeterGroup& g, const std::vector<GroupAlgebraVector>& basis)
{
	int d = static_cast<int>(basis.size());
	int order = g.order();
	RatMat rows(d, RatVec(order, Rat(0)));
	for (int i = 0; i < d; ++i)
		rows[i] = basis[i].dense(order);
	if (rational_rank(rows) != d)
		throw std::invalid_argument("radical_of_span: basis is linearly dependent");

	// unital: the group identity must lie in the span
	{
		RatVec unit(order, Rat(0));
		unit[g.identity()] = 1;
		if (!solve_in_rowspace(rows, unit))
			throw std::invalid_argument("radical_of_span: span does not contain the identity");
	}

	// structure constants c[i][j] with b_i b_j = sum_k c[i][j][k] b_k
	std::vector<std::vector<RatVec>> c(d, std::vector<RatVec>(d));
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
		{
			GroupAlgebraVector prod = convolve(g, basis[i], basis[j]);
			auto coords = solve_in_rowspace(rows, prod.dense(order));
			if (!coords)
				throw std::invalid_argument("radical_of_span: span is not closed under products");
			c[i][j] = std::move(*coords);
		}

	// trace form of the left-regular representation: L_i maps b_k to
	// sum_l c[i][k][l] b_l, so tr(L_i L_j) = sum_{k,l} c[i][k][l] c[j][l][k].
	RatMat gram(d, RatVec(d, Rat(0)));
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
		{
			Rat tr(0);
			for (int k = 0; k < d; ++k)
				for (int l = 0; l < d; ++l)
					tr += c[i][k][l] * c[j][l][k];
			gram[i][j] = tr;
		}

	RadicalResult out;
	out.coords = rational_left_nullspace(gram);
	out.dimension = static_cast<int>(out.coords.size());
	for (const auto& coord : out.coords)
	{
		GroupAlgebraVector v;
		for (int i = 0; i < d; ++i)
			if (coord[i] != 0)
				v += coord[i] * basis[i];
		out.basis.push_back(std::move(v));
	}

	// nilpotency: powers of the radical ideal reach zero
	std::vector<GroupAlgebraVector> power = out.basis;
	out.nilpotency_verified = power.empty();
	for (int step = 0; step <= d && !out.nilpotency_verified; ++step)
	{
		std::vector<GroupAlgebraVector> next;
		RatMat span;
		for (const auto& u : power)
			for (const auto& r : out.basis)
			{
				GroupAlgebraVector p = convolve(g, u, r);
				if (p.is_zero())
					continue;
				span.push_back(p.dense(order));
				if (rational_rank(span) == static_cast<int>(span.size()))
					next.push_back(std::move(p));
				else
					span.pop_back();
			}
		if (next.empty())
			out.nilpotency_verified = true;
		power = std::move(next);
	}
	return out;
}

// ---------------------------------------------------------------------------
// direct products
// ---------------------------------------------------------------------------

namespace {

struct Component
{
	std::vector<unsigned> gens; // generator indices inside the ambient group
	CoxeterGroup group;
	std::vector<int> embed; // element of component -> element of ambient
	std::vector<int> root_to_ambient;
};

Component build_component(const CoxeterGroup& g, const std::vector<unsigned>& gens)
{
	Component comp;
	comp.gens = gens;
	CoxeterMatrix sub(static_cast<unsigned>(gens.size()));
	for (unsigned i = 0; i < gens.size(); ++i)
	{
		sub.labels[i] = g.matrix().labels[gens[i]];
		for (unsigned j = 0; j < gens.size(); ++j)
			if (i != j)
				sub.set_bond(i, j, g.matrix().m(gens[i], gens[j]));
	}
	comp.group = CoxeterGroup::build(sub);
	comp.embed.resize(comp.group.order());
	for (int w = 0; w < comp.group.order(); ++w)
	{
		int acc = g.identity();
		for (std::uint8_t s : comp.group.word(w))
			acc = g.right_gen(acc, gens[s]);
		comp.embed[w] = acc;
	}
	comp.root_to_ambient.resize(comp.group.positive_roots());
	for (int r = 0; r < comp.group.positive_roots(); ++r)
	{
		int t = comp.embed[comp.group.reflection_elem(r)];
		int ar = g.reflection_root(t);
		if (ar < 0)
			throw std::logic_error("tensor check: embedded reflection is not a reflection");
		comp.root_to_ambient[r] = ar;
	}
	return comp;
}

RootMask restrict_mask(const CoxeterGroup& g, const Component& comp, RootMask ambient)
{
	RootMask out = 0;
	for (int r = 0; r < comp.group.positive_roots(); ++r)
		if (has_root(ambient, comp.root_to_ambient[r]))
			out |= root_bit(r);
	return out;
}

} // namespace

bool tensor_factorization_check(const CoxeterGroup& g, RootMask A)
{
	auto comps = g.components();
	if (comps.size() < 2)
		throw std::invalid_argument("tensor_factorization_check: diagram is connected");
	// first component against the rest
	std::vector<unsigned> gens1 = comps[0];
	std::vector<unsigned> gens2;
	for (std::size_t c = 1; c < comps.size(); ++c)
		gens2.insert(gens2.end(), comps[c].begin(), comps[c].end());
	Component c1 = build_component(g, gens1);
	Component c2 = build_component(g, gens2);

	// support bijection W ~ W1 x W2
	std::vector<int> pair_of(g.order(), -1);
	for (int u = 0; u < c1.group.order(); ++u)
		for (int v = 0; v < c2.group.order(); ++v)
		{
			int w = g.product(c1.embed[u], c2.embed[v]);
			if (pair_of[w] != -1)
				return false;
			pair_of[w] = u * c2.group.order() + v;
		}
	for (int w = 0; w < g.order(); ++w)
		if (pair_of[w] < 0)
			return false;

	// A splits over the components
	RootMask a1 = restrict_mask(g, c1, A);
	RootMask a2 = restrict_mask(g, c2, A);
	{
		RootMask covered = 0;
		for (int r = 0; r < c1.group.positive_roots(); ++r)
			covered |= root_bit(c1.root_to_ambient[r]);
		for (int r = 0; r < c2.group.positive_roots(); ++r)
			covered |= root_bit(c2.root_to_ambient[r]);
		if ((A & ~covered) != 0)
			return false;
	}

	DescentTable t = DescentTable::build(g, A);
	DescentTable t1 = DescentTable::build(c1.group, a1);
	DescentTable t2 = DescentTable::build(c2.group, a2);
	if (t.class_count() != t1.class_count() * t2.class_count())
		return false;

	// descent classes factor as element-set products
	std::vector<int> class_pair(t.class_count(), -1);
	for (int k = 0; k < t.class_count(); ++k)
	{
		RootMask I = t.cls(k).descents;
		auto i1 = t1.class_index(restrict_mask(g, c1, I));
		auto i2 = t2.class_index(restrict_mask(g, c2, I));
		if (!i1 || !i2)
			return false;
		class_pair[k] = *i1 * t2.class_count() + *i2;
		const auto& d1 = t1.cls(*i1).elements;
		const auto& d2 = t2.cls(*i2).elements;
		if (d1.size() * d2.size() != t.cls(k).elements.size())
			return false;
		std::vector<int> prod;
		prod.reserve(d1.size() * d2.size());
		for (int u : d1)
			for (int v : d2)
				prod.push_back(g.product(c1.embed[u], c2.embed[v]));
		std::sort(prod.begin(), prod.end());
		if (prod != t.cls(k).elements)
			return false;
	}
	// no two classes may collapse to the same pair
	{
		std::vector<int> sorted = class_pair;
		std::sort(sorted.begin(), sorted.end());
		if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
			return false;
	}

	// structure constants factor
	for (int I = 0; I < t.class_count(); ++I)
		for (int J = 0; J < t.class_count(); ++J)
			for (int K = 0; K < t.class_count(); ++K)
			{
				long long lhs = structure_constant(g, t, I, J, K);
				int i1 = class_pair[I] / t2.class_count(), i2 = class_pair[I] % t2.class_count();
				int j1 = class_pair[J] / t2.class_count(), j2 = class_pair[J] % t2.class_count();
				int k1 = class_pair[K] / t2.class_count(), k2 = class_pair[K] % t2.class_count();
				long long rhs = structure_constant(c1.group, t1, i1, j1, k1) *
				                structure_constant(c2.group, t2, i2, j2, k2);
				if (lhs != rhs)
					return false;
			}
	return true;
}

} // namespace coxdesc

