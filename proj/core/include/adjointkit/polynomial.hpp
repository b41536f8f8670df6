#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adjointkit/error.hpp"
#include "adjointkit/rational.hpp"
#include "adjointkit/ring.hpp"

namespace adjointkit {

/// Dense univariate polynomial over a coefficient ring, coefficients stored by
/// ascending degree. The zero polynomial is the empty coefficient list; any
/// nonzero polynomial has a nonzero trailing (highest-degree) coefficient.
template <Ring R> class Polynomial
{
  public:
	Polynomial() = default;
	Polynomial(int c) : Polynomial(R(c)) {}
	Polynomial(R c)
	{
		if (!is_zero(c))
			coeffs_.push_back(std::move(c));
	}
	explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

	static Polynomial monomial(R c, int deg)
	{
		if (is_zero(c))
			return {};
		std::vector<R> v(static_cast<std::size_t>(deg) + 1, R(0));
		v.back() = std::move(c);
		return Polynomial(std::move(v));
	}
	static Polynomial variable() { return monomial(R(1), 1); }

	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	bool zero() const { return coeffs_.empty(); }

	R coeff(int i) const
	{
		if (i < 0 || i >= static_cast<int>(coeffs_.size()))
			return R(0);
		return coeffs_[static_cast<std::size_t>(i)];
	}
	const R &leading() const { return coeffs_.back(); }
	const std::vector<R> &coefficients() const { return coeffs_; }

	R evaluate(const R &x) const
	{
		R acc(0);
		for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
			acc = acc * x + *it;
		return acc;
	}

	Polynomial operator-() const
	{
		Polynomial r = *this;
		for (auto &c : r.coeffs_)
			c = -c;
		return r;
	}

	Polynomial &operator+=(const Polynomial &o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size(), R(0));
		for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
			coeffs_[i] = coeffs_[i] + o.coeffs_[i];
		trim();
		return *this;
	}
	Polynomial &operator-=(const Polynomial &o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size(), R(0));
		for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
			coeffs_[i] = coeffs_[i] - o.coeffs_[i];
		trim();
		return *this;
	}
	Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
	Polynomial &operator*=(const R &s) { return *this = *this * s; }

	friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
	{
		if (a.zero() || b.zero())
			return {};
		std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
		for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
			for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
				v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
		return Polynomial(std::move(v));
	}
	friend Polynomial operator*(Polynomial a, const R &s)
	{
		for (auto &c : a.coeffs_)
			c = c * s;
		a.trim();
		return a;
	}
	friend Polynomial operator*(const R &s, Polynomial a) { return std::move(a) * s; }

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

  private:
	void trim()
	{
		while (!coeffs_.empty() && is_zero(coeffs_.back()))
			coeffs_.pop_back();
	}

	std::vector<R> coeffs_;
};

template <Ring R> bool is_zero(const Polynomial<R> &p) { return p.zero(); }

/// Quotient and remainder; requires field coefficients and nonzero divisor.
template <Field R>
std::pair<Polynomial<R>, Polynomial<R>> poly_divmod(const Polynomial<R> &a,
                                                    const Polynomial<R> &b)
{
	if (b.zero())
		throw kit_error(errc::division_by_zero, "polynomial division by zero");
	std::vector<R> rem(a.coefficients());
	std::vector<R> quot;
	int db = b.degree();
	if (a.degree() >= db)
		quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, R(0));
	for (int d = a.degree(); d >= db; --d)
	{
		R c = rem[static_cast<std::size_t>(d)];
		if (is_zero(c))
			continue;
		R q = c / b.leading();
		quot[static_cast<std::size_t>(d - db)] = q;
		for (int i = 0; i <= db; ++i)
			rem[static_cast<std::size_t>(d - db + i)] =
			    rem[static_cast<std::size_t>(d - db + i)] - q * b.coeff(i);
	}
	return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

/// Exact division; throws if the remainder is nonzero.
template <Field R>
Polynomial<R> poly_exact_div(const Polynomial<R> &a, const Polynomial<R> &b)
{
	auto [q, r] = poly_divmod(a, b);
	if (!r.zero())
		throw kit_error(errc::division_by_zero, "inexact polynomial division");
	return q;
}

/// Monic greatest common divisor via the Euclidean algorithm.
template <Field R> Polynomial<R> poly_gcd(Polynomial<R> a, Polynomial<R> b)
{
	if (a.zero() && b.zero())
		throw kit_error(errc::both_zero, "gcd(0, 0) is undefined");
	while (!b.zero())
	{
		auto [q, r] = poly_divmod(a, b);
		a = std::move(b);
		b = std::move(r);
	}
	return a * (R(1) / a.leading());
}

/// Descending-powers text form, e.g. "1/2*t^2 - t + 1/2". The formatter turns
/// one coefficient into its canonical string; a leading '-' is peeled off for
/// the " - " joiner.
template <Ring R>
std::string poly_text(const Polynomial<R> &p, const std::string &var,
                      const std::function<std::string(const R &)> &fmt)
{
	if (p.zero())
		return "0";
	std::string out;
	for (int d = p.degree(); d >= 0; --d)
	{
		R c = p.coeff(d);
		if (is_zero(c))
			continue;
		std::string cs = fmt(c);
		bool neg = !cs.empty() && cs.front() == '-';
		if (neg)
			cs.erase(cs.begin());
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		bool unit_coeff = cs == "1";
		if (d == 0)
			out += cs;
		else
		{
			if (!unit_coeff)
			{
				// A sum like "q - 1" needs parentheses before "*x"; a
				// quotient like "1/(q + 1)" does not.
				int depth = 0;
				bool composite = false;
				for (char ch : cs)
				{
					if (ch == '(')
						++depth;
					else if (ch == ')')
						--depth;
					else if (depth == 0 && (ch == '+' || ch == '-'))
						composite = true;
				}
				if (composite)
					cs = "(" + cs + ")";
				out += cs + "*";
			}
			out += var;
			if (d > 1)
				out += "^" + std::to_string(d);
		}
	}
	return out;
}

/// Convenience form using the domain's coeff_str.
template <Ring R>
std::string poly_text(const Polynomial<R> &p, const std::string &var)
{
	std::function<std::string(const R &)> fmt = [](const R &c) { return coeff_str(c); };
	return poly_text(p, var, fmt);
}

} // namespace adjointkit
