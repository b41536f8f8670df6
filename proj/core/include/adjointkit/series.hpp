#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adjointkit/hessenberg.hpp"
#include "adjointkit/multipoly.hpp"
#include "adjointkit/rational_function.hpp"
#include "adjointkit/ring.hpp"

namespace adjointkit {

/// Formal power series kept modulo degree order+1. Degrees 0..order are stored
/// and trusted; binary operations report the minimum of the operand orders.
template <Ring R> class TruncatedSeries
{
  public:
	explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
	{
		assert(!coeffs_.empty());
	}
	static TruncatedSeries one(int order)
	{
		std::vector<R> c(static_cast<std::size_t>(order) + 1, R(0));
		c[0] = R(1);
		return TruncatedSeries(std::move(c));
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	const R &coeff(int i) const
	{
		assert(i >= 0 && i <= order());
		return coeffs_[static_cast<std::size_t>(i)];
	}
	const std::vector<R> &coefficients() const { return coeffs_; }

	friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  private:
	std::vector<R> coeffs_;
};

namespace detail {

template <Ring R> void require_unit_constant_term(const TruncatedSeries<R> &f)
{
	if (!(f.coeff(0) == R(1)))
		throw kit_error(errc::nonunit_constant_term, "series constant term must be 1");
}

template <Ring R> void require_k_in_order(int k, int order)
{
	if (k < 0 || k > order)
		throw kit_error(errc::k_exceeds_order, "k = " + std::to_string(k) +
		                                           " exceeds series order " +
		                                           std::to_string(order));
}

} // namespace detail

template <Ring R>
TruncatedSeries<R> series_add(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
	int n = std::min(f.order(), g.order());
	std::vector<R> c(static_cast<std::size_t>(n) + 1, R(0));
	for (int i = 0; i <= n; ++i)
		c[static_cast<std::size_t>(i)] = f.coeff(i) + g.coeff(i);
	return TruncatedSeries<R>(std::move(c));
}

template <Ring R>
TruncatedSeries<R> series_sub(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
	int n = std::min(f.order(), g.order());
	std::vector<R> c(static_cast<std::size_t>(n) + 1, R(0));
	for (int i = 0; i <= n; ++i)
		c[static_cast<std::size_t>(i)] = f.coeff(i) - g.coeff(i);
	return TruncatedSeries<R>(std::move(c));
}

/// Cauchy product truncated to the minimum operand order.
template <Ring R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
	int n = std::min(f.order(), g.order());
	std::vector<R> c(static_cast<std::size_t>(n) + 1, R(0));
	for (int i = 0; i <= n; ++i)
		for (int j = 0; i + j <= n; ++j)
			c[static_cast<std::size_t>(i) + j] =
			    c[static_cast<std::size_t>(i) + j] + f.coeff(i) * g.coeff(j);
	return TruncatedSeries<R>(std::move(c));
}

/// Inverse of a series with constant term 1, by the division-free recursion
/// d_k = -sum_{i=1..k} a_i d_{k-i}.
template <Ring R> TruncatedSeries<R> series_invert(const TruncatedSeries<R> &f)
{
	detail::require_unit_constant_term(f);
	int n = f.order();
	std::vector<R> d(static_cast<std::size_t>(n) + 1, R(0));
	d[0] = R(1);
	for (int k = 1; k <= n; ++k)
	{
		R acc(0);
		for (int i = 1; i <= k; ++i)
			acc = acc + f.coeff(i) * d[static_cast<std::size_t>(k - i)];
		d[static_cast<std::size_t>(k)] = -acc;
	}
	return TruncatedSeries<R>(std::move(d));
}

/// f(s*x) from f(x): coefficient a_k becomes a_k s^k.
template <Ring R>
TruncatedSeries<R> series_scale_var(const TruncatedSeries<R> &f, const R &s)
{
	std::vector<R> c(f.coefficients());
	R power(1);
	for (int k = 1; k <= f.order(); ++k)
	{
		power = power * s;
		c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * power;
	}
	return TruncatedSeries<R>(std::move(c));
}

/// The k x k unit-subdiagonal Hessenberg matrix whose signed determinant is
/// the k-th coefficient of 1/f: row 0 holds (a_1 .. a_k), row r holds
/// a_{c-r+1} with a_0 = 1.
template <Ring R> HessenbergMatrix<R> wronski_matrix(const TruncatedSeries<R> &f, int k)
{
	HessenbergMatrix<R> A(k);
	for (int r = 0; r < k; ++r)
		for (int c = r == 0 ? 0 : r - 1; c < k; ++c)
		{
			int idx = r == 0 ? c + 1 : c - r + 1;
			A.at(r, c) = idx == 0 ? R(1) : f.coeff(idx);
		}
	return A;
}

/// The (k+1) x (k+1) matrix for the quotient g/f: first row (1, b_1 .. b_k),
/// the rest as in wronski_matrix.
template <Ring R>
HessenbergMatrix<R> quotient_matrix(const TruncatedSeries<R> &g, const TruncatedSeries<R> &f,
                                    int k)
{
	HessenbergMatrix<R> A(k + 1);
	for (int c = 0; c <= k; ++c)
		A.at(0, c) = c == 0 ? R(1) : g.coeff(c);
	for (int r = 1; r <= k; ++r)
		for (int c = r - 1; c <= k; ++c)
		{
			int idx = c - r + 1;
			A.at(r, c) = idx == 0 ? R(1) : f.coeff(idx);
		}
	return A;
}

/// D_k(f) = (-1)^k det of the Wronski matrix; the k-th coefficient of 1/f.
/// D_0 = 1 by convention.
template <Ring R> R wronski_Dk(const TruncatedSeries<R> &f, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	if (k == 0)
		return R(1);
	R det = hessenberg_det(wronski_matrix(f, k));
	return k % 2 == 0 ? det : -det;
}

/// D_k(g, f) = (-1)^k det of the quotient matrix; the k-th coefficient of g/f.
template <Ring R>
R quotient_Dk(const TruncatedSeries<R> &g, const TruncatedSeries<R> &f, int k)
{
	detail::require_unit_constant_term(g);
	detail::require_unit_constant_term(f);
	detail::require_k_in_order<R>(k, std::min(f.order(), g.order()));
	R det = hessenberg_det(quotient_matrix(g, f, k));
	return k % 2 == 0 ? det : -det;
}

// ---------------------------------------------------------------------------
// Named series and their text specs.

enum class series_kind { exp, qexp, geom, explicit_coeffs, prodroots };

/// A parsed series request: `exp`, `qexp`, `geom`, `poly:1,c1,...`,
/// `prodroots:m`.
struct SeriesSpec {
	series_kind kind = series_kind::exp;
	std::vector<Rational> coeffs; // explicit_coeffs only; coeffs[0] == 1
	int m = 0;                    // prodroots only

	static SeriesSpec named(series_kind kind);
	static SeriesSpec explicit_list(std::vector<Rational> coeffs);
	static SeriesSpec symbolic_roots(int m);

	/// Canonical text form, the inverse of the CLI grammar.
	std::string text() const;
	/// Domain this series spec naturally lives in (qexp -> Q(q), prodroots -> MultiPoly).
	RingSpec natural_domain() const;

	friend bool operator==(const SeriesSpec &, const SeriesSpec &) = default;
};

/// exp(t) truncated: a_k = 1/k!. Needs a field to divide by k!.
template <Field R> TruncatedSeries<R> exp_series(int order)
{
	std::vector<R> c(static_cast<std::size_t>(order) + 1, R(0));
	c[0] = R(1);
	R fact(1);
	for (int k = 1; k <= order; ++k)
	{
		fact = fact * R(k);
		c[static_cast<std::size_t>(k)] = R(1) / fact;
	}
	return TruncatedSeries<R>(std::move(c));
}

/// Geometric series: all a_k = 1.
template <Ring R> TruncatedSeries<R> geom_series(int order)
{
	return TruncatedSeries<R>(std::vector<R>(static_cast<std::size_t>(order) + 1, R(1)));
}

/// Series from explicit leading coefficients (padded with zeros up to order).
template <Ring R>
TruncatedSeries<R> explicit_series(const std::vector<R> &coeffs, int order)
{
	std::vector<R> c(static_cast<std::size_t>(order) + 1, R(0));
	for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i)
		c[i] = coeffs[i];
	return TruncatedSeries<R>(std::move(c));
}

/// The q-exponential: a_k = 1/[k]_q!.
TruncatedSeries<RationalFunction> qexp_series(int order);

/// prod_{i=1..m} (1 - x_i t) as a series in t over MultiPoly, via the
/// elementary-symmetric expansion a_k = (-1)^k e_k.
TruncatedSeries<MultiPoly> prodroots_series(int m, int order);

/// Realizers used by the CLI dispatch; throw SPEC_DOMAIN_MISMATCH when the
/// spec does not live in the requested domain.
TruncatedSeries<Rational> realize_rational(const SeriesSpec &spec, int order);
TruncatedSeries<RationalFunction> realize_ratfunc(const SeriesSpec &spec, int order);
TruncatedSeries<MultiPoly> realize_multipoly(const SeriesSpec &spec, int order);

} // namespace adjointkit
