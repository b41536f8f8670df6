#pragma once

#include <string>
#include <vector>

#include "adjointkit/polynomial.hpp"
#include "adjointkit/report.hpp"
#include "adjointkit/series.hpp"

namespace adjointkit {

enum class pfk_source { det, rec, conv };

inline const char *pfk_source_name(pfk_source s) noexcept
{
	switch (s)
	{
	case pfk_source::det:
		return "det";
	case pfk_source::rec:
		return "rec";
	case pfk_source::conv:
		return "conv";
	}
	return "?";
}

/// P_{f,k}(t): degree <= k, P_k(1) = 0 for k >= 1, t^k coefficient a_k.
template <Ring R> struct PfkPolynomial {
	Polynomial<R> poly;
	int k = 0;
	pfk_source source = pfk_source::rec;
};

/// The (k+1) x (k+1) bordered matrix with first row (1, a_1 t, ..., a_k t^k)
/// over the polynomial ring in t; its signed determinant is P_{f,k}(t).
template <Ring R>
HessenbergMatrix<Polynomial<R>> pfk_matrix(const TruncatedSeries<R> &f, int k)
{
	HessenbergMatrix<Polynomial<R>> A(k + 1);
	for (int c = 0; c <= k; ++c)
		A.at(0, c) = Polynomial<R>::monomial(c == 0 ? R(1) : f.coeff(c), c);
	for (int r = 1; r <= k; ++r)
		for (int c = r - 1; c <= k; ++c)
		{
			int idx = c - r + 1;
			A.at(r, c) = Polynomial<R>(idx == 0 ? R(1) : f.coeff(idx));
		}
	return A;
}

/// Determinant path: Hessenberg cofactor recursion over the polynomial ring.
template <Ring R> PfkPolynomial<R> pfk_determinant(const TruncatedSeries<R> &f, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	if (k == 0)
		return {Polynomial<R>(1), 0, pfk_source::det};
	Polynomial<R> det = hessenberg_det(pfk_matrix(f, k));
	return {k % 2 == 0 ? det : -det, k, pfk_source::det};
}

/// All of P_0..P_k by the recursion P_k = a_k t^k - sum_{i=1..k} a_i P_{k-i}.
template <Ring R>
std::vector<Polynomial<R>> pfk_recursion_all(const TruncatedSeries<R> &f, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	std::vector<Polynomial<R>> p;
	p.reserve(static_cast<std::size_t>(k) + 1);
	p.push_back(Polynomial<R>(1));
	for (int n = 1; n <= k; ++n)
	{
		Polynomial<R> acc = Polynomial<R>::monomial(f.coeff(n), n);
		for (int i = 1; i <= n; ++i)
			acc -= Polynomial<R>(f.coeff(i)) * p[static_cast<std::size_t>(n - i)];
		p.push_back(std::move(acc));
	}
	return p;
}

/// Recursion path.
template <Ring R> PfkPolynomial<R> pfk_recursion(const TruncatedSeries<R> &f, int k)
{
	auto all = pfk_recursion_all(f, k);
	return {std::move(all.back()), k, pfk_source::rec};
}

/// Convolution path: P_{f,k}(t) = sum_{j=0..k} a_{k-j} D_j(f) t^{k-j}, with
/// the D_j taken from the Wronski determinants.
template <Ring R> PfkPolynomial<R> pfk_convolution(const TruncatedSeries<R> &f, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	std::vector<R> c(static_cast<std::size_t>(k) + 1, R(0));
	for (int j = 0; j <= k; ++j)
		c[static_cast<std::size_t>(k - j)] = f.coeff(k - j) * wronski_Dk(f, j);
	return {Polynomial<R>(std::move(c)), k, pfk_source::conv};
}

/// Elementary symmetric functions e_0..e_k of the root multiset of P_{f,k},
/// computed root-free: e_j = (-1)^j a_{k-j} D_j(f) / a_k.
template <Field R> struct RootSymmetrics {
	int k = 0;
	std::vector<R> e;
};

template <Field R>
RootSymmetrics<R> root_symmetrics(const TruncatedSeries<R> &f, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	R lead = f.coeff(k);
	if (is_zero(lead))
		throw kit_error(errc::vanishing_leading_coeff,
		                "a_" + std::to_string(k) + " = 0; use zk path");
	RootSymmetrics<R> rs;
	rs.k = k;
	rs.e.reserve(static_cast<std::size_t>(k) + 1);
	for (int j = 0; j <= k; ++j)
	{
		R ej = f.coeff(k - j) * wronski_Dk(f, j) / lead;
		rs.e.push_back(j % 2 == 0 ? ej : -ej);
	}
	return rs;
}

// ---------------------------------------------------------------------------
// Identity checks. Each compares two independently computed sides exactly.

/// f(tx)/f(x) = sum_k P_{f,k}(t) x^k at t = t_value, degrees 0..N. The left
/// side goes through series_scale_var / series_invert / series_mul, the right
/// through the P-recursion evaluated at t_value.
template <Ring R>
IdentityReport verify_ftxfx(const TruncatedSeries<R> &f, const R &t_value, int N)
{
	detail::require_unit_constant_term(f);
	detail::require_k_in_order<R>(N, f.order());
	IdentityReport rep;
	rep.identity = "ftxfx";
	auto lhs = series_mul(series_scale_var(f, t_value), series_invert(f));
	auto p = pfk_recursion_all(f, N);
	for (int k = 0; k <= N; ++k)
	{
		R left = lhs.coeff(k);
		R right = p[static_cast<std::size_t>(k)].evaluate(t_value);
		rep.add(k, "x^" + std::to_string(k), coeff_str(left), coeff_str(right),
		        left == right);
	}
	return rep;
}

/// P_{f,k}(st) = sum_{i=0..k} P_{f,i}(s) P_{f,k-i}(t) t^i, evaluated exactly.
template <Ring R>
IdentityReport verify_pfk_mult(const TruncatedSeries<R> &f, const R &s, const R &t, int k)
{
	detail::require_k_in_order<R>(k, f.order());
	IdentityReport rep;
	rep.identity = "pfk-mult";
	auto p = pfk_recursion_all(f, k);
	R st = s * t;
	R left = p[static_cast<std::size_t>(k)].evaluate(st);
	R right(0);
	R t_power(1);
	for (int i = 0; i <= k; ++i)
	{
		right = right + p[static_cast<std::size_t>(i)].evaluate(s) *
		                    p[static_cast<std::size_t>(k - i)].evaluate(t) * t_power;
		t_power = t_power * t;
	}
	rep.add(k, "k=" + std::to_string(k), coeff_str(left), coeff_str(right), left == right);
	return rep;
}

} // namespace adjointkit
