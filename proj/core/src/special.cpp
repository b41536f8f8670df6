#include "adjointkit/special.hpp"

#include "adjointkit/hessenberg.hpp"
#include "adjointkit/pfk.hpp"

namespace adjointkit {

namespace {

using QPoly = Polynomial<RationalFunction>;

RationalFunction inv_q_factorial(int j)
{
	return RationalFunction(1) / RationalFunction(q_factorial(j));
}

/// prod_{i=0..k-1} (t - q^i) / [k]_q! as a polynomial in t over Q(q).
QPoly qexp_pfk_closed_form(int k)
{
	QPoly prod(RationalFunction(1));
	for (int i = 0; i < k; ++i)
		prod = prod * (QPoly::variable() - QPoly(RationalFunction::q_power(i)));
	return prod * inv_q_factorial(k);
}

/// The bordered determinant form of the factorization: first row
/// (1, t/[1]_q!, ..., t^k/[k]_q!), then the Hessenberg rows of the same
/// reciprocal q-factorials.
QPoly factorization_determinant(int k)
{
	int n = k + 1;
	HessenbergMatrix<QPoly> M(n);
	for (int c = 0; c < n; ++c)
		M.at(0, c) = QPoly::monomial(inv_q_factorial(c), c);
	for (int r = 1; r < n; ++r)
	{
		M.at(r, r - 1) = QPoly(RationalFunction(1));
		for (int c = r; c < n; ++c)
			M.at(r, c) = QPoly(inv_q_factorial(c - r + 1));
	}
	return hessenberg_det(M);
}

std::string qpoly_text(const QPoly &p) { return poly_text(p, "t"); }

} // namespace

IdentityReport verify_qexp_factorization(int k_max)
{
	auto f = qexp_series(k_max);
	IdentityReport rep;
	rep.identity = "qexp-factorization";
	rep.subject = "qexp, k <= " + std::to_string(k_max);
	for (int k = 1; k <= k_max; ++k)
	{
		QPoly target = qexp_pfk_closed_form(k);
		QPoly det = pfk_determinant(f, k).poly;
		QPoly rec = pfk_recursion(f, k).poly;
		QPoly conv = pfk_convolution(f, k).poly;
		bool paths_ok = det == target && rec == target && conv == target;
		rep.add(k, "P_" + std::to_string(k), qpoly_text(rec), qpoly_text(target),
		        paths_ok);

		QPoly det_lhs = factorization_determinant(k);
		QPoly det_rhs(RationalFunction(1));
		for (int i = 0; i < k; ++i)
			det_rhs = det_rhs *
			          (QPoly(RationalFunction::q_power(i)) - QPoly::variable());
		det_rhs = det_rhs * inv_q_factorial(k);
		rep.add(k, "det_" + std::to_string(k), qpoly_text(det_lhs),
		        qpoly_text(det_rhs), det_lhs == det_rhs);

		for (int a = 0; a < k; ++a)
		{
			RationalFunction v = rec.evaluate(RationalFunction::q_power(a));
			rep.add(k, "P_" + std::to_string(k) + "(q^" + std::to_string(a) + ")",
			        v.str(), "0", is_zero(v));
		}
	}
	return rep;
}

IdentityReport verify_qexp_shift(int n, int N)
{
	auto f = qexp_series(N);
	IdentityReport rep;
	rep.identity = "qexp-shift";
	rep.subject = "qexp, n = " + std::to_string(n) + ", order " + std::to_string(N);

	// c_k = (q^n - 1)(q^n - q)...(q^n - q^{k-1}) / [k]_q!, zero once k > n.
	std::vector<RationalFunction> c{RationalFunction(1)};
	for (int k = 1; k <= n; ++k)
	{
		RationalFunction prod(1);
		for (int i = 0; i < k; ++i)
			prod = prod * (RationalFunction::q_power(n) - RationalFunction::q_power(i));
		c.push_back(prod * inv_q_factorial(k));
	}
	auto bracket = explicit_series<RationalFunction>(c, N);

	auto lhs = series_scale_var(f, RationalFunction::q_power(n));
	auto rhs = series_mul(f, bracket);
	for (int k = 0; k <= N; ++k)
		rep.add(k, "x^" + std::to_string(k), lhs.coeff(k).str(), rhs.coeff(k).str(),
		        lhs.coeff(k) == rhs.coeff(k));

	QPoly from_c;
	for (int k = 0; k < static_cast<int>(c.size()); ++k)
		from_c = from_c + QPoly::monomial(c[static_cast<std::size_t>(k)], k);
	QPoly prod(RationalFunction(1));
	for (int i = 1; i <= n; ++i)
	{
		RationalFunction slope =
		    (RationalFunction::q() - RationalFunction(1)) *
		    RationalFunction::q_power(i - 1);
		prod = prod * (QPoly(RationalFunction(1)) + QPoly::monomial(slope, 1));
	}
	rep.add(n, "bracket-product", poly_text(from_c, "x"), poly_text(prod, "x"),
	        from_c == prod);
	return rep;
}

HLResult hall_littlewood_Qk(int m, int k)
{
	if (m < 1)
		throw kit_error(errc::bad_spec, "need at least one x variable");
	std::vector<MultiPoly> a;
	a.reserve(static_cast<std::size_t>(k) + 1);
	for (int j = 0; j <= k; ++j)
	{
		MultiPoly ej = elementary_symmetric(m, j);
		a.push_back(j % 2 == 0 ? ej : -ej);
	}
	TruncatedSeries<MultiPoly> f(std::move(a));
	Polynomial<MultiPoly> p = pfk_recursion(f, k).poly;
	return HLResult{m, k, p.evaluate(MultiPoly::var(m))};
}

HLResult hl_oracle(int m, int k)
{
	if (m < 1)
		throw kit_error(errc::bad_spec, "need at least one x variable");
	MultiPoly t = MultiPoly::var(m);
	auto acc = TruncatedSeries<MultiPoly>::one(k);
	for (int i = 0; i < m; ++i)
	{
		MultiPoly xi = MultiPoly::var(i);
		std::vector<MultiPoly> geom{MultiPoly(1)};
		for (int j = 1; j <= k; ++j)
			geom.push_back(geom.back() * xi);
		std::vector<MultiPoly> numer{MultiPoly(1)};
		if (k >= 1)
		{
			numer.push_back(-(xi * t));
			numer.resize(static_cast<std::size_t>(k) + 1, MultiPoly());
		}
		acc = series_mul(acc, series_mul(TruncatedSeries<MultiPoly>(std::move(numer)),
		                                 TruncatedSeries<MultiPoly>(std::move(geom))));
	}
	return HLResult{m, k, acc.coeff(k)};
}

IdentityReport verify_hall_littlewood(int m_max, int k_max)
{
	IdentityReport rep;
	rep.identity = "hall-littlewood";
	rep.subject = "m <= " + std::to_string(m_max) + ", k <= " + std::to_string(k_max);
	for (int m = 1; m <= m_max; ++m)
		for (int k = 0; k <= k_max; ++k)
		{
			auto lhs = hall_littlewood_Qk(m, k);
			auto rhs = hl_oracle(m, k);
			rep.add(k, "m=" + std::to_string(m) + ",k=" + std::to_string(k),
			        multipoly_text(lhs.value, m), multipoly_text(rhs.value, m),
			        lhs.value == rhs.value);
		}
	return rep;
}

} // namespace adjointkit
