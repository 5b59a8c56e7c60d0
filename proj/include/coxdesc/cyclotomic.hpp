#pragma once

#include "coxdesc/rational.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace coxdesc {

// Bond order value standing for m(s,s') = infinity.
inline constexpr unsigned kInfiniteBond = 0;

// Integer polynomial, coefficient of x^i at index i. Trailing coefficient nonzero
// unless the polynomial is zero (empty vector).
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; throws std::logic_error if the division has a remainder.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);
// n-th cyclotomic polynomial, by recursive exact division of x^n - 1.
IntPoly cyclotomic_polynomial(unsigned n);
unsigned euler_totient(unsigned n);

namespace detail {
struct FieldData
{
	unsigned n = 0;       // c = 2cos(pi/n)
	IntPoly minpoly;      // monic minimal polynomial of c over Q
	unsigned degree = 0;  // deg(minpoly) = dimension over Q
};
} // namespace detail

class Field;

// Element of Q(c), c = 2cos(pi/n), in the power basis 1, c, ..., c^{degree-1}.
// Always reduced modulo the minimal polynomial: equality is coefficient equality.
class FieldElement
{
public:
	FieldElement() = default;

	const std::vector<Rat>& coeffs() const { return coeffs_; }
	bool is_zero() const;
	bool is_rational() const;
	// The rational constant term; throws if the element is not rational.
	Rat to_rational() const;

	FieldElement operator-() const;
	FieldElement& operator+=(const FieldElement& o);
	FieldElement& operator-=(const FieldElement& o);
	friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
	friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
	friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
	// Division; throws std::domain_error on division by zero.
	friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
	FieldElement inverse() const;
	FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

	bool operator==(const FieldElement& o) const { return coeffs_ == o.coeffs_; }
	bool operator!=(const FieldElement& o) const { return !(*this == o); }
	// Deterministic total order (used as a map key for root lookup).
	bool operator<(const FieldElement& o) const;

	std::string str() const;
	Field field() const;

private:
	friend class Field;
	FieldElement(std::shared_ptr<const detail::FieldData> d, std::vector<Rat> c)
	    : data_(std::move(d)), coeffs_(std::move(c))
	{
	}

	std::shared_ptr<const detail::FieldData> data_;
	std::vector<Rat> coeffs_;
};

// The real cyclotomic field Q(2cos(pi/n)). Immutable, cheap to copy.
class Field
{
public:
	Field() = default;

	// Builds the field for a given n >= 1. The minimal polynomial comes from the
	// 2n-th cyclotomic polynomial via the substitution y = x + 1/x; its degree is
	// phi(2n)/2 for n >= 2. No floating point is involved.
	static Field make(unsigned n);

	unsigned n() const { return data_->n; }
	const IntPoly& minpoly() const { return data_->minpoly; }
	unsigned degree() const { return data_->degree; }

	FieldElement zero() const;
	FieldElement one() const;
	FieldElement from_rational(const Rat& q) const;
	FieldElement from_int(long v) const { return from_rational(Rat(v)); }
	// c itself (reduced, so for degree-1 fields this is the rational root).
	FieldElement generator() const;
	// 2cos(k*pi/n), by the three-term recurrence u_{k+1} = c*u_k - u_{k-1}.
	FieldElement two_cos(unsigned k) const;
	// cos(pi/m) for a bond order m: m must divide n; m = kInfiniteBond gives 1
	// (so that B(alpha_s, alpha_t) = -1 for an unbounded bond).
	// Throws std::invalid_argument("conductor mismatch...") if m does not divide n.
	FieldElement cos_pi_over(unsigned m) const;

	bool same_field(const Field& o) const { return data_ == o.data_ || data_->n == o.data_->n; }

private:
	explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
	friend class FieldElement;

	std::shared_ptr<const detail::FieldData> data_;
};

} // namespace coxdesc
