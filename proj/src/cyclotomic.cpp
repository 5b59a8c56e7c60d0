#include "coxdesc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace coxdesc {

Rat rat_from_string(const std::string& s)
{
	Rat r(s);
	r.canonicalize();
	return r;
}

std::string hex64(std::uint64_t v)
{
	static const char* digits = "0123456789abcdef";
	std::string out(16, '0');
	for (int i = 15; i >= 0; --i)
	{
		out[i] = digits[v & 0xf];
		v >>= 4;
	}
	return out;
}

static void poly_trim(IntPoly& p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
	if (a.empty() || b.empty())
		return {};
	IntPoly out(a.size() + b.size() - 1, BigInt(0));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			out[i + j] += a[i] * b[j];
	poly_trim(out);
	return out;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den)
{
	if (den.empty())
		throw std::logic_error("polynomial division by zero");
	IntPoly rem = num;
	poly_trim(rem);
	if (rem.size() < den.size())
	{
		if (rem.empty())
			return {};
		throw std::logic_error("polynomial division is not exact");
	}
	IntPoly quot(rem.size() - den.size() + 1, BigInt(0));
	const BigInt& lead = den.back();
	for (std::size_t k = quot.size(); k-- > 0;)
	{
		std::size_t top = k + den.size() - 1;
		if (rem.size() <= top || rem[top] == 0)
			continue;
		BigInt q, r;
		mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[top].get_mpz_t(), lead.get_mpz_t());
		if (r != 0)
			throw std::logic_error("polynomial division is not exact");
		quot[k] = q;
		for (std::size_t i = 0; i < den.size(); ++i)
			rem[k + i] -= q * den[i];
	}
	poly_trim(rem);
	if (!rem.empty())
		throw std::logic_error("polynomial division is not exact");
	poly_trim(quot);
	return quot;
}

unsigned euler_totient(unsigned n)
{
	unsigned result = n;
	for (unsigned p = 2; p * p <= n; ++p)
	{
		if (n % p == 0)
		{
			while (n % p == 0)
				n /= p;
			result -= result / p;
		}
	}
	if (n > 1)
		result -= result / n;
	return result;
}

IntPoly cyclotomic_polynomial(unsigned n)
{
	static std::map<unsigned, IntPoly> cache;
	static std::mutex mutex;
	std::lock_guard<std::mutex> lock(mutex);

	auto it = cache.find(n);
	if (it != cache.end())
		return it->second;
	if (n == 0)
		throw std::invalid_argument("cyclotomic_polynomial: n must be positive");

	// x^n - 1 divided by the product of Phi_d over proper divisors d of n.
	IntPoly num(n + 1, BigInt(0));
	num[0] = -1;
	num[n] = 1;
	IntPoly den = {BigInt(1)};
	for (unsigned d = 1; d < n; ++d)
	{
		if (n % d != 0)
			continue;
		auto jt = cache.find(d);
		if (jt == cache.end())
		{
			// Fill the cache bottom-up to keep the recursion shallow.
			IntPoly numd(d + 1, BigInt(0));
			numd[0] = -1;
			numd[d] = 1;
			IntPoly dend = {BigInt(1)};
			for (unsigned e = 1; e < d; ++e)
				if (d % e == 0)
					dend = poly_mul(dend, cache.at(e));
			cache[d] = poly_div_exact(numd, dend);
			jt = cache.find(d);
		}
		den = poly_mul(den, jt->second);
	}
	IntPoly phi = poly_div_exact(num, den);
	cache[n] = phi;
	return phi;
}

// P palindromic of even degree d: returns q of degree d/2 with P(x) = x^{d/2} q(x + 1/x).
static IntPoly palindromic_descend(const IntPoly& p)
{
	if (p.empty() || (p.size() - 1) % 2 != 0)
		throw std::logic_error("palindromic_descend: expected even degree");
	std::size_t d = p.size() - 1;
	std::size_t h = d / 2;
	for (std::size_t i = 0; i <= d; ++i)
		if (p[i] != p[d - i])
			throw std::logic_error("palindromic_descend: polynomial is not palindromic");

	// p_k(y) with x^k + x^{-k} = p_k(x + 1/x): p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}.
	std::vector<IntPoly> pk(h + 1);
	pk[0] = {BigInt(2)};
	if (h >= 1)
		pk[1] = {BigInt(0), BigInt(1)};
	for (std::size_t k = 2; k <= h; ++k)
	{
		IntPoly t = poly_mul(pk[k - 1], IntPoly{BigInt(0), BigInt(1)});
		if (t.size() < pk[k - 2].size())
			t.resize(pk[k - 2].size(), BigInt(0));
		for (std::size_t i = 0; i < pk[k - 2].size(); ++i)
			t[i] -= pk[k - 2][i];
		pk[k] = t;
	}

	IntPoly q(h + 1, BigInt(0));
	q[0] = p[h];
	for (std::size_t k = 1; k <= h; ++k)
		for (std::size_t i = 0; i < pk[k].size(); ++i)
			q[i] += p[h + k] * pk[k][i];
	poly_trim(q);
	return q;
}

Field Field::make(unsigned n)
{
	if (n == 0)
		throw std::invalid_argument("Field::make: n must be positive");
	auto data = std::make_shared<detail::FieldData>();
	data->n = n;
	if (n == 1)
	{
		// c = 2cos(pi) = -2; the palindromic construction degenerates (phi(2) = 1).
		data->minpoly = {BigInt(2), BigInt(1)};
	}
	else
	{
		data->minpoly = palindromic_descend(cyclotomic_polynomial(2 * n));
	}
	data->degree = static_cast<unsigned>(data->minpoly.size() - 1);
	return Field(std::move(data));
}

FieldElement Field::zero() const
{
	return FieldElement(data_, std::vector<Rat>(data_->degree, Rat(0)));
}

FieldElement Field::one() const { return from_rational(Rat(1)); }

FieldElement Field::from_rational(const Rat& q) const
{
	std::vector<Rat> c(data_->degree, Rat(0));
	if (data_->degree == 0)
		throw std::logic_error("Field: degree-0 field");
	c[0] = q;
	return FieldElement(data_, std::move(c));
}

FieldElement Field::generator() const
{
	if (data_->degree == 1)
	{
		// c is rational: root of the linear minpoly a0 + x.
		Rat root = make_rat(-data_->minpoly[0], data_->minpoly[1]);
		return from_rational(root);
	}
	std::vector<Rat> c(data_->degree, Rat(0));
	c[1] = 1;
	return FieldElement(data_, std::move(c));
}

FieldElement Field::two_cos(unsigned k) const
{
	FieldElement prev = from_int(2); // 2cos(0)
	if (k == 0)
		return prev;
	FieldElement cur = generator(); // 2cos(pi/n)
	for (unsigned i = 1; i < k; ++i)
	{
		FieldElement next = cur * generator() - prev;
		prev = cur;
		cur = next;
	}
	return cur;
}

FieldElement Field::cos_pi_over(unsigned m) const
{
	if (m == kInfiniteBond)
		return one();
	if (m < 1 || n() % m != 0)
	{
		std::ostringstream os;
		os << "conductor mismatch: bond order " << m << " does not divide n = " << n();
		throw std::invalid_argument(os.str());
	}
	return two_cos(n() / m) / from_int(2);
}

bool FieldElement::is_zero() const
{
	for (const auto& c : coeffs_)
		if (c != 0)
			return false;
	return true;
}

bool FieldElement::is_rational() const
{
	for (std::size_t i = 1; i < coeffs_.size(); ++i)
		if (coeffs_[i] != 0)
			return false;
	return true;
}

Rat FieldElement::to_rational() const
{
	if (!is_rational())
		throw std::domain_error("FieldElement::to_rational: element is irrational: " + str());
	return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

Field FieldElement::field() const { return Field(data_); }

FieldElement FieldElement::operator-() const
{
	FieldElement out = *this;
	for (auto& c : out.coeffs_)
		c = -c;
	return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] -= o.coeffs_[i];
	return *this;
}

// Reduce a rational polynomial modulo the (monic, integer) minimal polynomial.
static std::vector<Rat> reduce_mod_minpoly(std::vector<Rat> p, const IntPoly& minpoly)
{
	std::size_t deg = minpoly.size() - 1;
	for (std::size_t k = p.size(); k-- > deg;)
	{
		if (p[k] == 0)
			continue;
		Rat q = p[k];
		for (std::size_t i = 0; i < deg; ++i)
			p[k - deg + i] -= q * Rat(minpoly[i]);
		p[k] = 0;
	}
	p.resize(deg, Rat(0));
	return p;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
	std::size_t n = a.coeffs_.size();
	std::vector<Rat> prod(2 * n - 1, Rat(0));
	for (std::size_t i = 0; i < n; ++i)
	{
		if (a.coeffs_[i] == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (b.coeffs_[j] == 0)
				continue;
			prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
	}
	return FieldElement(a.data_, reduce_mod_minpoly(std::move(prod), a.data_->minpoly));
}

// Extended Euclid in Q[x] against the minimal polynomial.
FieldElement FieldElement::inverse() const
{
	if (is_zero())
		throw std::domain_error("FieldElement: division by zero");
	using Poly = std::vector<Rat>;
	auto trim = [](Poly& p) {
		while (!p.empty() && p.back() == 0)
			p.pop_back();
	};
	auto divmod = [&](const Poly& num, const Poly& den) {
		Poly rem = num;
		trim(rem);
		Poly quot;
		if (rem.size() >= den.size())
			quot.assign(rem.size() - den.size() + 1, Rat(0));
		while (!rem.empty() && rem.size() >= den.size())
		{
			Rat q = rem.back() / den.back();
			std::size_t shift = rem.size() - den.size();
			quot[shift] += q;
			for (std::size_t i = 0; i < den.size(); ++i)
				rem[shift + i] -= q * den[i];
			trim(rem);
		}
		trim(quot);
		return std::pair<Poly, Poly>(std::move(quot), std::move(rem));
	};
	auto mul = [&](const Poly& a, const Poly& b) {
		if (a.empty() || b.empty())
			return Poly{};
		Poly out(a.size() + b.size() - 1, Rat(0));
		for (std::size_t i = 0; i < a.size(); ++i)
			for (std::size_t j = 0; j < b.size(); ++j)
				out[i + j] += a[i] * b[j];
		trim(out);
		return out;
	};

	// Invariant: r_i = s_i * (*this) + t_i * minpoly.
	Poly r0(data_->minpoly.size());
	for (std::size_t i = 0; i < r0.size(); ++i)
		r0[i] = Rat(data_->minpoly[i]);
	Poly r1(coeffs_.begin(), coeffs_.end());
	trim(r1);
	Poly s0 = {}, s1 = {Rat(1)};
	while (!r1.empty())
	{
		auto [quot, rem] = divmod(r0, r1);
		Poly qs = mul(quot, s1);
		Poly snext(std::max(s0.size(), qs.size()), Rat(0));
		for (std::size_t i = 0; i < s0.size(); ++i)
			snext[i] += s0[i];
		for (std::size_t i = 0; i < qs.size(); ++i)
			snext[i] -= qs[i];
		trim(snext);
		r0 = std::move(r1);
		r1 = std::move(rem);
		s0 = std::move(s1);
		s1 = std::move(snext);
	}
	if (r0.size() != 1)
		throw std::logic_error("FieldElement::inverse: minimal polynomial is not irreducible?");
	Poly inv = s0;
	for (auto& c : inv)
		c /= r0[0];
	inv.resize(std::max<std::size_t>(inv.size(), data_->degree), Rat(0));
	return FieldElement(data_, reduce_mod_minpoly(std::move(inv), data_->minpoly));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool FieldElement::operator<(const FieldElement& o) const
{
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
	{
		int c = cmp(coeffs_[i], o.coeffs_[i]);
		if (c != 0)
			return c < 0;
	}
	return false;
}

std::string FieldElement::str() const
{
	std::ostringstream os;
	bool first = true;
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
	{
		if (coeffs_[i] == 0)
			continue;
		if (!first)
			os << " + ";
		os << to_string(coeffs_[i]);
		if (i == 1)
			os << "*c";
		else if (i > 1)
			os << "*c^" << i;
		first = false;
	}
	if (first)
		os << "0";
	return os.str();
}

} // namespace coxdesc
