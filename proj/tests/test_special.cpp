#include <doctest.h>

#include "adjointkit/pfk.hpp"
#include "adjointkit/special.hpp"
#include "support/oracles.hpp"

using namespace adjointkit;

TEST_CASE("qexp factorization report")
{
	auto rep = verify_qexp_factorization(5);
	CHECK(rep.pass);

	// k=1 product line reads t - 1; k=2 reads ((t-1)(t-q))/(1+q) expanded.
	REQUIRE(!rep.lines.empty());
	CHECK(rep.lines[0].label == "P_1");
	CHECK(rep.lines[0].rhs == "t - 1");
	for (const auto &line : rep.lines)
		CHECK(line.ok);
}

TEST_CASE("qexp factorization at q=1 degenerates to exp")
{
	// Substituting q=1 into P_{qexp,k} gives (t-1)^k/k!.
	auto f = qexp_series(5);
	for (int k = 1; k <= 5; ++k)
	{
		auto pk = pfk_recursion(f, k).poly;
		auto ek = pfk_recursion(exp_series<Rational>(5), k).poly;
		for (int d = 0; d <= k; ++d)
		{
			auto c = pk.coeff(d);
			Rational at1 = c.num().evaluate(Rational(1)) / c.den().evaluate(Rational(1));
			CHECK(at1 == ek.coeff(d));
		}
	}
}

TEST_CASE("qexp vanishing at powers of q")
{
	auto f = qexp_series(6);
	for (int k = 1; k <= 6; ++k)
	{
		auto pk = pfk_recursion(f, k).poly;
		for (int a = 0; a < k; ++a)
			CHECK(is_zero(pk.evaluate(RationalFunction::q_power(a))));
		CHECK_FALSE(is_zero(pk.evaluate(RationalFunction::q_power(k))));
	}
}

TEST_CASE("qexp shift identity")
{
	auto rep0 = verify_qexp_shift(0, 4);
	CHECK(rep0.pass);

	auto rep1 = verify_qexp_shift(1, 4);
	CHECK(rep1.pass);
	CHECK(rep1.lines.back().label == "bracket-product");
	CHECK(rep1.lines.back().lhs == "(q - 1)*x + 1");

	for (int n = 2; n <= 4; ++n)
		CHECK(verify_qexp_shift(n, 8).pass);
}

TEST_CASE("hall-littlewood pinned values")
{
	CHECK(hall_littlewood_Qk(3, 0).value == MultiPoly(1));
	CHECK(hl_oracle(2, 0).value == MultiPoly(1));

	// m=3, k=1: (1 - t)(x1 + x2 + x3)
	auto q31 = hall_littlewood_Qk(3, 1);
	auto e1 = elementary_symmetric(3, 1);
	CHECK(q31.value == e1 - e1 * MultiPoly::var(3));
	CHECK(hl_oracle(3, 1).value == q31.value);

	// m=1, k=2: (1 - t) x1^2
	auto x1 = MultiPoly::var(0);
	auto o12 = hl_oracle(1, 2);
	CHECK(o12.value == x1 * x1 - x1 * x1 * MultiPoly::var(1));

	// m=2, k=2: (1 - t)(x1^2 + x1 x2 + x2^2 - t x1 x2)
	auto x2 = MultiPoly::var(1);
	auto t = MultiPoly::var(2);
	auto inner = x1 * x1 + x1 * x2 + x2 * x2 - t * (x1 * x2);
	CHECK(hall_littlewood_Qk(2, 2).value == inner - t * inner);
}

TEST_CASE("hall-littlewood equals the generating-function oracle")
{
	auto rep = verify_hall_littlewood(3, 4);
	CHECK(rep.pass);
	for (const auto &line : rep.lines)
		CHECK(line.ok);
}

TEST_CASE("hall-littlewood degenerations and stability")
{
	// t = 0 gives the complete homogeneous polynomial h_k.
	for (int m = 1; m <= 3; ++m)
		for (int k = 0; k <= 4; ++k)
		{
			auto qk = hall_littlewood_Qk(m, k);
			auto h = set_var_zero(qk.value, m);
			CHECK(h == testsupport::complete_homogeneous(m, k));
		}

	// x_{m+1} = 0 collapses m+1 variables to m.
	for (int m = 1; m <= 3; ++m)
		for (int k = 0; k <= 4; ++k)
		{
			auto big = hall_littlewood_Qk(m + 1, k);
			auto cut = set_var_zero(big.value, m); // kill x_{m+1}
			auto shifted = drop_slot(cut, m);      // t moves from slot m+1 to m
			CHECK(shifted == hall_littlewood_Qk(m, k).value);
		}
}
