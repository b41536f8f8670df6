#include <doctest.h>

#include "adjointkit/multipoly.hpp"
#include "adjointkit/qspecial.hpp"
#include "adjointkit/rational_function.hpp"
#include "adjointkit/ring.hpp"
#include "support/rng.hpp"

using namespace adjointkit;

namespace {
Polynomial<Rational> qp(std::vector<Rational> c) { return Polynomial<Rational>(std::move(c)); }
} // namespace

TEST_CASE("rational arithmetic is exact")
{
	CHECK(Rational(1) / Rational(2) + Rational(1) / Rational(3) ==
	      Rational(5) / Rational(6));
	CHECK(coeff_str(Rational(5) / Rational(6)) == "5/6");
	CHECK(coeff_str(Rational(3)) == "3");
	CHECK(coeff_str(Rational(-3) / Rational(6)) == "-1/2");
}

TEST_CASE("rational parse round-trips and rejects junk")
{
	CHECK(parse_rational("5/6") == Rational(5) / Rational(6));
	CHECK(parse_rational("-7") == Rational(-7));
	CHECK(parse_rational("+2/4") == Rational(1) / Rational(2));
	CHECK_THROWS_AS(parse_rational(""), kit_error);
	CHECK_THROWS_AS(parse_rational("1/0"), kit_error);
	CHECK_THROWS_AS(parse_rational("q"), kit_error);
	CHECK_THROWS_AS(parse_rational("1.5"), kit_error);
	try
	{
		parse_rational("x");
	}
	catch (const kit_error &e)
	{
		CHECK(e.code() == errc::bad_rational);
		CHECK(std::string(errc_name(e.code())) == "BAD_RATIONAL");
	}
}

TEST_CASE("random rationals associate and distribute")
{
	testsupport::Rng rng(17);
	for (int i = 0; i < 1000; ++i)
	{
		Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("polynomial arithmetic and normal form")
{
	auto qplus1 = qp({Rational(1), Rational(1)});
	auto qminus1 = qp({Rational(-1), Rational(1)});
	CHECK(qplus1 * qminus1 == qp({Rational(-1), Rational(0), Rational(1)}));
	CHECK((qplus1 - qplus1).zero());
	CHECK((qplus1 - qplus1).degree() == -1);
	CHECK(qplus1.evaluate(Rational(3)) == Rational(4));
	CHECK(poly_text(qp({Rational(1) / Rational(2), Rational(-1),
	                    Rational(1) / Rational(2)}),
	                "t") == "1/2*t^2 - t + 1/2");
}

TEST_CASE("poly_divmod and exact division")
{
	auto num = qp({Rational(-1), Rational(0), Rational(1)}); // q^2 - 1
	auto den = qp({Rational(-1), Rational(1)});              // q - 1
	auto [quo, rem] = poly_divmod(num, den);
	CHECK(quo == qp({Rational(1), Rational(1)}));
	CHECK(rem.zero());
	CHECK(poly_exact_div(num, den) == quo);
	CHECK_THROWS_AS(poly_divmod(num, Polynomial<Rational>()), kit_error);
	CHECK_THROWS_AS(poly_exact_div(qp({Rational(1), Rational(1)}), den), kit_error);
}

TEST_CASE("poly_gcd is monic and divides both inputs")
{
	auto g = poly_gcd(qp({Rational(-1), Rational(0), Rational(1)}),
	                  qp({Rational(-1), Rational(1)}));
	CHECK(g == qp({Rational(-1), Rational(1)}));
	CHECK(poly_gcd(qp({Rational(0), Rational(1)}), qp({Rational(1)})) ==
	      qp({Rational(1)}));
	CHECK(poly_gcd(qp({Rational(2), Rational(2)}), qp({Rational(4), Rational(4)})) ==
	      qp({Rational(1), Rational(1)}));
	CHECK_THROWS_AS(poly_gcd(Polynomial<Rational>(), Polynomial<Rational>()),
	                kit_error);

	testsupport::Rng rng(23);
	for (int i = 0; i < 20; ++i)
	{
		std::vector<Rational> ca, cb;
		for (int d = 0; d <= rng.uniform(1, 4); ++d)
			ca.push_back(rng.rational());
		for (int d = 0; d <= rng.uniform(1, 4); ++d)
			cb.push_back(rng.rational());
		Polynomial<Rational> a(ca), b(cb);
		if (a.zero() && b.zero())
			continue;
		auto d = poly_gcd(a, b);
		if (!a.zero())
			CHECK(poly_divmod(a, d).second.zero());
		if (!b.zero())
			CHECK(poly_divmod(b, d).second.zero());
	}
}

TEST_CASE("rational function canonical form")
{
	RationalFunction inv(qp({Rational(1)}), qp({Rational(1), Rational(1)}));
	CHECK(inv.str() == "1/(q + 1)");
	CHECK((RationalFunction(qp({Rational(-1), Rational(0), Rational(1)})) /
	       RationalFunction(qp({Rational(-1), Rational(1)})))
	          .str() == "q + 1");
	CHECK_THROWS_AS(RationalFunction(qp({Rational(1)}), Polynomial<Rational>()),
	                kit_error);

	testsupport::Rng rng(5);
	for (int i = 0; i < 50; ++i)
	{
		std::vector<Rational> cn{rng.rational(), rng.nonzero_rational()};
		std::vector<Rational> cd{rng.rational(), rng.nonzero_rational()};
		Rational s = rng.nonzero_rational();
		RationalFunction plain(qp(cn), qp(cd));
		RationalFunction scaled(qp(cn) * s, qp(cd) * s);
		CHECK(plain.num() == scaled.num());
		CHECK(plain.den() == scaled.den());
	}
}

TEST_CASE("rational function arithmetic in Q(q)")
{
	auto q = RationalFunction::q();
	auto one = RationalFunction(1);
	CHECK((one / (one + q)).str() == "1/(q + 1)");
	CHECK((q * q - one) / (q - one) == q + one);
	CHECK((q - q).zero());
	CHECK_THROWS_AS(one / (q - q), kit_error);
	CHECK(RationalFunction::q_power(3).str() == "q^3");
	CHECK(((q - one) / (q + one)).str() == "(q - 1)/(q + 1)");
}

TEST_CASE("multipoly arithmetic and canonical text")
{
	auto x1 = MultiPoly::var(0), x2 = MultiPoly::var(1);
	CHECK((x1 * x2 * MultiPoly(0)).terms().empty());
	auto p = x1 * x1 * x2 - MultiPoly(2) * x1 * x2 * MultiPoly::var(2);
	CHECK(multipoly_text(p, 2) == "x1^2*x2 - 2*x1*x2*t");
	CHECK(p + (-p) == MultiPoly());

	auto dropped = set_var_zero(p, 2);
	CHECK(multipoly_text(dropped, 2) == "x1^2*x2");
}

TEST_CASE("elementary symmetric polynomials")
{
	CHECK(multipoly_text(elementary_symmetric(3, 1), 3) == "x1 + x2 + x3");
	CHECK(elementary_symmetric(2, 3).terms().empty());
	CHECK(multipoly_text(elementary_symmetric(3, 2), 3) ==
	      "x1*x2 + x1*x3 + x2*x3");
	CHECK(elementary_symmetric(3, 0) == MultiPoly(1));

	// prod_i (1 + x_i u) = sum_k e_k u^k, coefficient by coefficient.
	for (int m = 1; m <= 4; ++m)
	{
		Polynomial<MultiPoly> prod(MultiPoly(1));
		for (int i = 0; i < m; ++i)
			prod = prod * Polynomial<MultiPoly>(
			                  std::vector<MultiPoly>{MultiPoly(1), MultiPoly::var(i)});
		for (int k = 0; k <= m; ++k)
			CHECK(prod.coeff(k) == elementary_symmetric(m, k));
	}
}

TEST_CASE("ring spec selection and guards")
{
	CHECK(ring_spec_name(RingSpec::rational()) == "RATIONAL");
	CHECK(ring_spec_name(RingSpec::ratfunc_q()) == "RATFUNC_Q");
	CHECK(ring_spec_name(RingSpec::multipoly(2)) == "MULTIPOLY(2)");
	CHECK_THROWS_AS(RingSpec::multipoly(0), kit_error);
	CHECK_THROWS_AS(require_same_domain(RingSpec::rational(), RingSpec::ratfunc_q()),
	                kit_error);
	CHECK(RingSpec::ratfunc_q().is_field());
	CHECK_FALSE(RingSpec::multipoly(3).is_field());
	try
	{
		require_field(RingSpec::multipoly(3));
		CHECK(false);
	}
	catch (const kit_error &e)
	{
		CHECK(e.code() == errc::not_a_field);
	}
}

TEST_CASE("q-integers and q-factorials")
{
	CHECK(q_integer(0).zero());
	CHECK(q_integer(1) == qp({Rational(1)}));
	CHECK(q_integer(4).evaluate(Rational(1)) == Rational(4));
	CHECK(q_factorial(0) == qp({Rational(1)}));
	CHECK(q_factorial(2) == qp({Rational(1), Rational(1)}));
	CHECK(q_factorial(3) ==
	      qp({Rational(1), Rational(2), Rational(2), Rational(1)}));
}
