#pragma once

#include <string>
#include <utility>

#include "adjointkit/polynomial.hpp"
#include "adjointkit/rational.hpp"

namespace adjointkit {

/// Element of Q(q): a quotient of polynomials in q over Rational, reduced
/// eagerly on construction. Canonical form: gcd(num, den) = 1 and den monic
/// (so integer denominators like 1+q print with positive leading sign).
class RationalFunction
{
  public:
	RationalFunction() : den_(1) {}
	RationalFunction(int c) : num_(c), den_(1) {}
	RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}
	RationalFunction(Polynomial<Rational> num) : num_(std::move(num)), den_(1) {}
	RationalFunction(Polynomial<Rational> num, Polynomial<Rational> den);

	/// The generator q of the field.
	static RationalFunction q() { return RationalFunction(Polynomial<Rational>::variable()); }
	/// q^n for n >= 0.
	static RationalFunction q_power(int n)
	{
		return RationalFunction(Polynomial<Rational>::monomial(Rational(1), n));
	}

	const Polynomial<Rational> &num() const { return num_; }
	const Polynomial<Rational> &den() const { return den_; }
	bool zero() const { return num_.zero(); }
	bool is_polynomial() const { return den_.degree() == 0; }

	RationalFunction operator-() const;
	friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
	friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
	friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
	friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
	RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
	RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
	RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
	RationalFunction &operator/=(const RationalFunction &o) { return *this = *this / o; }

	friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

	/// Canonical string, e.g. "q^2 + q", "1/(q + 1)", "(q - 1)/(q + 1)".
	std::string str() const;

  private:
	Polynomial<Rational> num_;
	Polynomial<Rational> den_;
};

inline bool is_zero(const RationalFunction &r) { return r.zero(); }
inline std::string coeff_str(const RationalFunction &r) { return r.str(); }

} // namespace adjointkit
