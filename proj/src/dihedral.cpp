#include "coxdesc/dihedral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxdesc {

// ---------------------------------------------------------------------------
// finite dihedral groups
// ---------------------------------------------------------------------------

DihedralGroup::NormalForm DihedralGroup::multiply(NormalForm a, NormalForm b, int m)
{
	// (r^k s^d)(r^l s^e) = r^{k + (d ? -l : l)} s^{d xor e}
	int period = 2 * m;
	int k = a.k + (a.refl ? -b.k : b.k);
	k %= period;
	if (k < 0)
		k += period;
	return NormalForm{a.refl ^ b.refl, k};
}

DihedralGroup DihedralGroup::make(int m)
{
	if (m < 2)
		throw std::invalid_argument("DihedralGroup: m must be >= 2");
	DihedralGroup d;
	d.m_ = m;
	CoxeterMatrix mat = CoxeterMatrix::of_type("I2_" + std::to_string(2 * m));
	d.g_ = CoxeterGroup::build(mat);
	int order = d.g_.order();
	if (order != 4 * m)
		throw std::logic_error("DihedralGroup: unexpected order");

	// normal forms by the word recurrences: x s and x t from x = r^k s^d
	d.forms_.assign(order, NormalForm{0, 0});
	d.elem_of_form_.assign(order, -1);
	std::vector<std::uint8_t> known(order, 0);
	known[d.g_.identity()] = 1;
	d.elem_of_form_[0] = d.g_.identity();
	int period = 2 * m;
	for (int w = 0; w < order; ++w)
	{
		if (!known[w])
			throw std::logic_error("DihedralGroup: BFS order broken");
		NormalForm f = d.forms_[w];
		// right multiply by s = (refl 1, k 0) and t = (refl 1, k -1)
		NormalForm fs = multiply(f, NormalForm{1, 0}, m);
		NormalForm ft = multiply(f, NormalForm{1, period - 1}, m);
		int ws = d.g_.right_gen(w, 0), wt = d.g_.right_gen(w, 1);
		for (auto [child, cf] : {std::pair<int, NormalForm>{ws, fs}, {wt, ft}})
		{
			if (!known[child])
			{
				known[child] = 1;
				d.forms_[child] = cf;
				d.elem_of_form_[cf.refl * period + cf.k] = child;
			}
			else if (d.forms_[child].refl != cf.refl || d.forms_[child].k != cf.k)
				throw std::logic_error("DihedralGroup: normal forms inconsistent");
		}
	}
	// bijection and product agreement over all pairs
	for (int i = 0; i < order; ++i)
		if (d.elem_of_form_[i] < 0)
			throw std::logic_error("DihedralGroup: normal form map is not onto");
	for (int u = 0; u < order; ++u)
		for (int v = 0; v < order; ++v)
		{
			NormalForm f = multiply(d.forms_[u], d.forms_[v], m);
			if (d.element_of(f) != d.g_.product(u, v))
				throw std::logic_error("DihedralGroup: normal-form product mismatch");
		}
	return d;
}

int DihedralGroup::element_of(NormalForm f) const
{
	return elem_of_form_[f.refl * 2 * m_ + f.k];
}

int DihedralGroup::rotation(int k) const
{
	int period = 2 * m_;
	k %= period;
	if (k < 0)
		k += period;
	return elem_of_form_[k];
}

RootMask DihedralGroup::class_of_t() const { return g_.generator_class_mask(1); }

RootMask DihedralGroup::subset_a() const
{
	return reflections_from_words({"s", "t", "sts"});
}

RootMask DihedralGroup::subset_b() const
{
	return root_bit(g_.reflection_root(s())) | class_of_t();
}

RootMask DihedralGroup::reflections_from_words(std::initializer_list<const char*> words) const
{
	RootMask out = 0;
	for (const char* w : words)
	{
		int e = g_.element_of_word(w);
		int r = g_.reflection_root(e);
		if (r < 0)
			throw std::invalid_argument(std::string("not a reflection: ") + w);
		out |= root_bit(r);
	}
	return out;
}

// ---------------------------------------------------------------------------
// character table
// ---------------------------------------------------------------------------

int DihedralCharTable::index_of(const std::string& name) const
{
	for (std::size_t i = 0; i < names.size(); ++i)
		if (names[i] == name)
			return static_cast<int>(i);
	throw std::invalid_argument("DihedralCharTable: unknown name " + name);
}

std::vector<FieldElement> DihedralCharTable::embed(const ClassFunction& f) const
{
	std::vector<FieldElement> out;
	out.reserve(f.values.size());
	for (const auto& v : f.values)
		out.push_back(field.from_rational(v));
	return out;
}

std::vector<FieldElement> DihedralCharTable::chi_sum() const
{
	std::vector<FieldElement> out(rows[0].size(), field.zero());
	for (std::size_t i = 0; i < names.size(); ++i)
		if (names[i].rfind("chi_", 0) == 0)
			for (std::size_t c = 0; c < out.size(); ++c)
				out[c] += rows[i][c];
	return out;
}

DihedralCharTable DihedralCharTable::build(const DihedralGroup& d)
{
	const CoxeterGroup& g = d.group();
	int m = d.m();
	DihedralCharTable t;
	t.m = m;
	t.field = Field::make(m);
	const Field& F = t.field;
	int nc = g.class_count();
	if (nc != m + 3)
		throw std::logic_error("char table: expected m+3 conjugacy classes");

	// value index per class: rotation angle j (0..m) or reflection marker
	auto two_cos_index = [&](long prod) {
		long period = 2 * m;
		long x = prod % period;
		if (x < 0)
			x += period;
		if (x > m)
			x = period - x;
		return static_cast<unsigned>(x);
	};

	// gamma is the linear character with gamma(s) = -gamma(t) = 1; on a word it
	// is (-1)^{number of t letters}, well defined because the bond order is even
	auto gamma_of = [&](int w) {
		int count = 0;
		for (std::uint8_t c : g.word(w))
			if (c == 1)
				++count;
		return (count % 2) ? -1 : 1;
	};

	t.names = {"1", "eps", "gamma", "eps_gamma"};
	t.rows.assign(4, std::vector<FieldElement>(nc, F.zero()));
	for (int c = 0; c < nc; ++c)
	{
		int rep = g.class_rep(c);
		int eps = (g.length(rep) % 2) ? -1 : 1;
		int gam = gamma_of(rep);
		// linear characters must be constant on classes
		for (int w = 0; w < g.order(); ++w)
			if (g.class_of(w) == c && (((g.length(w) % 2) ? -1 : 1) != eps || gamma_of(w) != gam))
				throw std::logic_error("char table: linear character not constant on a class");
		t.rows[0][c] = F.one();
		t.rows[1][c] = F.from_int(eps);
		t.rows[2][c] = F.from_int(gam);
		t.rows[3][c] = F.from_int(eps * gam);
	}
	for (int i = 1; i <= m - 1; ++i)
	{
		std::vector<FieldElement> row(nc, F.zero());
		for (int c = 0; c < nc; ++c)
		{
			auto f = d.normal_form(g.class_rep(c));
			if (f.refl)
				row[c] = F.zero();
			else
				row[c] = F.two_cos(two_cos_index(static_cast<long>(i) * f.k));
		}
		t.names.push_back("chi_" + std::to_string(i));
		t.rows.push_back(std::move(row));
	}

	// verification: orthonormality
	for (std::size_t a = 0; a < t.rows.size(); ++a)
		for (std::size_t b = a; b < t.rows.size(); ++b)
		{
			FieldElement ip = F.zero();
			for (int c = 0; c < nc; ++c)
				ip += F.from_int(g.class_size(c)) * t.rows[a][c] * t.rows[b][c];
			ip = ip / F.from_int(g.order());
			if (ip != (a == b ? F.one() : F.zero()))
				throw std::logic_error("char table: rows are not orthonormal");
		}

	// verification: chi_i = induced from the rotation subgroup H = <st> with
	// xi_i(st) = zeta^i, via the exponent-count form of the induction formula
	{
		std::vector<std::uint8_t> in_h(g.order(), 0);
		for (int k = 0; k < 2 * m; ++k)
			in_h[d.rotation(k)] = 1;
		for (int i = 1; i <= m - 1; ++i)
		{
			const auto& row = t.rows[t.index_of("chi_" + std::to_string(i))];
			for (int c = 0; c < nc; ++c)
			{
				int rep = g.class_rep(c);
				std::vector<long> counts(2 * m, 0);
				for (int x = 0; x < g.order(); ++x)
				{
					int conj = d.group().conjugated(rep, x);
					if (in_h[conj])
						++counts[d.normal_form(conj).k];
				}
				for (int k = 1; k < 2 * m; ++k)
					if (counts[k] != counts[2 * m - k])
						throw std::logic_error("char table: induced value is not real");
				// sum over k of counts[k] zeta^{ik} = counts[0] + (-1)^i counts[m]
				//   + sum_{k=1}^{m-1} counts[k] * 2cos(ik pi/m)
				FieldElement sum = F.from_int(counts[0]);
				sum += F.from_int((i % 2) ? -counts[m] : counts[m]);
				for (int k = 1; k < m; ++k)
					sum += F.from_int(counts[k]) *
					       F.two_cos(two_cos_index(static_cast<long>(i) * k));
				sum = sum / F.from_int(2 * m);
				if (sum != row[c])
					throw std::logic_error("char table: induced description fails");
			}
		}
	}
	return t;
}

IntVec irreducible_coordinates(const DihedralGroup& d, const DihedralCharTable& table,
                               const ClassFunction& f)
{
	const CoxeterGroup& g = d.group();
	const Field& F = table.field;
	int nc = g.class_count();
	IntVec out(table.rows.size());
	for (std::size_t i = 0; i < table.rows.size(); ++i)
	{
		FieldElement ip = F.zero();
		for (int c = 0; c < nc; ++c)
			ip += F.from_int(g.class_size(c)) * F.from_rational(f.values[c]) * table.rows[i][c];
		ip = ip / F.from_int(g.order());
		Rat q = ip.to_rational(); // throws if irrational
		if (!is_integer(q))
			throw std::domain_error("irreducible_coordinates: non-integral multiplicity");
		out[i] = q.get_num();
	}
	return out;
}

bool theta_image_spans_character_lattice(const DihedralGroup& d, const DihedralCharTable& table,
                                         const CosetModule& module, const ThetaMap& theta)
{
	IntegerLattice lat(table.rows.size());
	for (std::size_t i = 0; i < module.entries.size(); ++i)
		lat.insert(irreducible_coordinates(d, table, theta.images[i]));
	if (lat.rank() != static_cast<int>(table.rows.size()))
		return false;
	for (std::size_t i = 0; i < table.rows.size(); ++i)
	{
		IntVec e(table.rows.size(), BigInt(0));
		e[i] = 1;
		if (!lat.contains(e))
			return false;
	}
	return true;
}

// ---------------------------------------------------------------------------
// idempotents for A = {s, t, sts}
// ---------------------------------------------------------------------------

namespace {

GroupAlgebraVector x_of(const CoxeterGroup& g, const CosetModule& module, RootMask rep)
{
	auto idx = module.entry_index(rep);
	if (!idx)
		throw std::logic_error("idempotent_system: missing canonical subset");
	return GroupAlgebraVector::from_elements(module.entries[*idx].coset_reps);
}

int rank_of_vectors(const CoxeterGroup& g, const std::vector<GroupAlgebraVector>& vs)
{
	RatMat rows;
	for (const auto& v : vs)
		rows.push_back(v.dense(g.order()));
	return rational_rank(std::move(rows));
}

} // namespace

IdempotentSystem idempotent_system(const DihedralGroup& d)
{
	const CoxeterGroup& g = d.group();
	int m = d.m();
	RootMask A = d.subset_a();
	CosetModule module = coset_module(g, A);
	if (module.entries.size() != 6 || !module.p0_is_basis)
		throw std::logic_error("idempotent_system: unexpected module shape");

	int rs = g.reflection_root(d.s());
	int rt = g.reflection_root(d.t());
	int rsts = g.reflection_root(g.element_of_word("sts"));
	GroupAlgebraVector x_empty = x_of(g, module, 0);
	GroupAlgebraVector x_s = x_of(g, module, root_bit(rs));
	GroupAlgebraVector x_t = x_of(g, module, root_bit(rt));
	GroupAlgebraVector x_sts = x_of(g, module, root_bit(rsts));
	GroupAlgebraVector x_sbar = x_of(g, module, root_bit(rt) | root_bit(rsts));
	GroupAlgebraVector x_a = x_of(g, module, A);

	IdempotentSystem sys;
	Rat quarter = make_rat(1, 4);
	Rat half = make_rat(1, 2);
	sys.idempotents[0] = make_rat(1, 4 * m) * x_empty;
	sys.idempotents[1] = half * x_s + (-quarter) * x_empty;
	sys.idempotents[2] = half * x_t + (-quarter) * x_empty;
	sys.idempotents[3] =
	    half * x_sbar + (-quarter) * x_t + (-quarter) * x_sts + make_rat(m - 1, 4 * m) * x_empty;
	sys.idempotents[4] = x_a + (-half) * x_s + (-quarter) * x_t + quarter * x_sts +
	                     (-half) * x_sbar + quarter * x_empty;

	// orthogonal idempotents summing to the identity
	GroupAlgebraVector sum;
	for (int i = 0; i < 5; ++i)
	{
		sum += sys.idempotents[i];
		for (int j = 0; j < 5; ++j)
		{
			GroupAlgebraVector prod = convolve(g, sys.idempotents[i], sys.idempotents[j]);
			if (i == j ? !(prod == sys.idempotents[i]) : !prod.is_zero())
				throw std::logic_error("idempotent_system: orthogonality fails");
		}
	}
	if (!(sum == GroupAlgebraVector::basis_element(g.identity())))
		throw std::logic_error("idempotent_system: idempotents do not sum to 1");

	// projective dimensions dim Q Sigma_A E_i
	std::vector<GroupAlgebraVector> basis;
	for (std::size_t i = 0; i < module.entries.size(); ++i)
		basis.push_back(GroupAlgebraVector::from_elements(module.entries[i].coset_reps));
	for (int i = 0; i < 5; ++i)
	{
		std::vector<GroupAlgebraVector> prods;
		for (const auto& b : basis)
			prods.push_back(convolve(g, b, sys.idempotents[i]));
		sys.projective_dims[i] = rank_of_vectors(g, prods);
	}

	// x_sbar E_s = -(1/2)(x_t - x_sts); this is the scalar the multiplication
	// table and the E_s formula force (E_s absorbs the outer 1/2)
	{
		GroupAlgebraVector lhs = convolve(g, x_sbar, sys.idempotents[1]);
		GroupAlgebraVector rhs = make_rat(1, 2) * (x_sts - x_t);
		if (!(lhs == rhs))
			throw std::logic_error("idempotent_system: x_sbar E_s identity fails");
	}

	// separating evaluations through the theta images. The E_sbar character
	// needs an evaluation point that is a nontrivial rotation fixed by both
	// sign characters: w0 = (st)^m works when m is even, (st)^2 otherwise.
	ThetaMap theta = theta_map(g, module);
	sys.eval_elems = {g.identity(), d.s(), d.t(), (m % 2 == 0) ? d.w0() : d.rotation(2),
	                  d.rotation(1)};
	// coordinates of E_j in the x-basis (by construction)
	std::array<std::vector<std::pair<int, Rat>>, 5> coords;
	auto at = [&](RootMask rep) { return *module.entry_index(rep); };
	int ie = at(0), is = at(root_bit(rs)), it = at(root_bit(rt)), ists = at(root_bit(rsts)),
	    isb = at(root_bit(rt) | root_bit(rsts)), ia = at(A);
	coords[0] = {{ie, make_rat(1, 4 * m)}};
	coords[1] = {{is, half}, {ie, -quarter}};
	coords[2] = {{it, half}, {ie, -quarter}};
	coords[3] = {{isb, half}, {it, -quarter}, {ists, -quarter}, {ie, make_rat(m - 1, 4 * m)}};
	coords[4] = {{ia, Rat(1)}, {is, -half}, {it, -quarter}, {ists, quarter}, {isb, -half},
	             {ie, quarter}};
	for (int i = 0; i < 5; ++i)
		for (int j = 0; j < 5; ++j)
		{
			Rat v(0);
			for (const auto& [entry, c] : coords[j])
				v += c * evaluate_at(g, theta.images[entry], sys.eval_elems[i]);
			sys.eval_matrix[i][j] = v;
			if (v != (i == j ? Rat(1) : Rat(0)))
				throw std::logic_error("idempotent_system: separating evaluations fail");
		}

	// Rad(P_s): one-dimensional, spanned by x_sbar E_s inside the radical
	{
		RadicalResult rad = radical_of_span(g, basis);
		if (rad.dimension != 1 || !rad.nilpotency_verified)
			throw std::logic_error("idempotent_system: radical dimension is not 1");
		GroupAlgebraVector k = convolve(g, x_sbar, sys.idempotents[1]); // = x_sts - x_t
		// k spans the radical
		RatMat rows{rad.basis[0].dense(g.order()), k.dense(g.order())};
		if (k.is_zero() || rational_rank(rows) != 1)
			throw std::logic_error("idempotent_system: Rad(P_s) generator mismatch");
		// k lies in P_s = span{ b E_s }
		std::vector<GroupAlgebraVector> ps;
		for (const auto& b : basis)
			ps.push_back(convolve(g, b, sys.idempotents[1]));
		RatMat ps_rows;
		for (const auto& v : ps)
			ps_rows.push_back(v.dense(g.order()));
		if (!solve_in_rowspace(ps_rows, k.dense(g.order())))
			throw std::logic_error("idempotent_system: Rad(P_s) is not inside P_s");
	}
	return sys;
}

// ---------------------------------------------------------------------------
// infinite dihedral group
// ---------------------------------------------------------------------------

std::vector<std::string> infinite_dihedral_elements(int bound)
{
	std::vector<std::string> out = {""};
	for (int len = 1; len <= bound; ++len)
		for (char first : {'s', 't'})
		{
			std::string w;
			char c = first;
			for (int i = 0; i < len; ++i)
			{
				w += c;
				c = (c == 's') ? 't' : 's';
			}
			out.push_back(w);
		}
	return out;
}

namespace {

struct IMat
{
	long long e[2][2];
};

IMat imul(const IMat& x, const IMat& y)
{
	IMat out{};
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			out.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
	return out;
}

IMat gen_matrix(char c)
{
	// s: alpha_s -> -alpha_s, alpha_t -> alpha_t + 2 alpha_s (B(alpha_s,alpha_t) = -1)
	if (c == 's')
		return IMat{{{-1, 2}, {0, 1}}};
	return IMat{{{1, 0}, {2, -1}}};
}

IMat word_matrix(const std::string& w)
{
	IMat acc{{{1, 0}, {0, 1}}};
	for (char c : w)
		acc = imul(acc, gen_matrix(c));
	return acc;
}

struct IVec
{
	long long a, b;
	bool operator==(const IVec& o) const { return a == o.a && b == o.b; }
};

IVec mat_apply(const IMat& m, const IVec& v)
{
	return IVec{m.e[0][0] * v.a + m.e[0][1] * v.b, m.e[1][0] * v.a + m.e[1][1] * v.b};
}

// positive roots have nonnegative coordinates; negatives nonpositive
int root_sign(const IVec& v)
{
	if (v.a >= 0 && v.b >= 0 && (v.a || v.b))
		return 1;
	if (v.a <= 0 && v.b <= 0 && (v.a || v.b))
		return -1;
	throw std::logic_error("infinite dihedral: vector is not a root");
}

// root of the reflection given by an odd alternating word: prefix(alpha_mid)
IVec reflection_root_of_word(const std::string& w)
{
	if (w.size() % 2 == 0)
		throw std::invalid_argument("not a reflection word: " + w);
	std::string prefix = w.substr(0, w.size() / 2);
	char mid = w[w.size() / 2];
	IVec alpha = (mid == 's') ? IVec{1, 0} : IVec{0, 1};
	IVec root = mat_apply(word_matrix(prefix), alpha);
	if (root_sign(root) < 0)
		root = IVec{-root.a, -root.b};
	return root;
}

std::string reverse_word(const std::string& w) { return std::string(w.rbegin(), w.rend()); }

} // namespace

InfiniteDihedralReport infinite_descent_stability(const std::vector<std::string>& subset_words,
                                                  int length_bound)
{
	InfiniteDihedralReport rep;
	rep.subset_words = subset_words;
	rep.length_bound = length_bound;

	struct Member
	{
		std::string word;
		IMat mat;
		IVec root;
	};
	std::vector<Member> a;
	for (const auto& w : subset_words)
		a.push_back(Member{w, word_matrix(w), reflection_root_of_word(w)});

	auto descent_mask_of = [&](const IMat& m) {
		unsigned mask = 0;
		for (std::size_t i = 0; i < a.size(); ++i)
			if (root_sign(mat_apply(m, a[i].root)) < 0)
				mask |= 1u << i;
		return mask;
	};

	for (const std::string& w : infinite_dihedral_elements(length_bound))
	{
		IMat mw = word_matrix(w);
		IMat mw_inv = word_matrix(reverse_word(w)); // generators are involutions
		unsigned dw = descent_mask_of(mw);
		for (const auto& r : a)
		{
			// w^{-1} r w is the reflection in w^{-1}(alpha_r)
			IVec conj_root = mat_apply(mw_inv, r.root);
			if (root_sign(conj_root) < 0)
				conj_root = IVec{-conj_root.a, -conj_root.b};
			bool in_a = false;
			for (const auto& other : a)
				if (conj_root == other.root)
				{
					in_a = true;
					break;
				}
			if (in_a)
				continue;
			++rep.pairs_checked;
			IMat mrw = imul(r.mat, mw);
			if (descent_mask_of(mrw) != dw)
				rep.violations.emplace_back(r.word, w.empty() ? "e" : w);
		}
	}
	return rep;
}

} // namespace coxdesc

