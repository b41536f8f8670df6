// Acceptance gate: every release-blocking check in one binary, one line of
// output per criterion, nonzero exit if anything fails or overruns its budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "adjointkit/freealg.hpp"
#include "adjointkit/json_io.hpp"
#include "adjointkit/pfk.hpp"
#include "adjointkit/special.hpp"
#include "support/bareiss.hpp"
#include "support/golden_cases.hpp"
#include "support/oracles.hpp"
#include "support/rng.hpp"

using namespace adjointkit;

namespace {

struct Criterion {
	const char *description;
	double budget_seconds;
	std::function<bool(std::string &)> run;
};

bool classical_conjugation(std::string &why)
{
	const int N = 8;
	auto f = exp_series<Rational>(N);
	auto conj = conjugate_series(f, N);
	Rational factorial(1);
	for (int k = 1; k <= N; ++k)
	{
		factorial *= k;
		std::vector<Rational> ones(static_cast<std::size_t>(k), Rational(1));
		auto expected = nested_bracket<Rational>(ones, N + 1) * (Rational(1) / factorial);
		if (length_slice(conj, k + 1) != expected)
		{
			why = "slice k=" + std::to_string(k) + " differs from (ad x)^k(y)/k!";
			return false;
		}
	}
	return true;
}

bool scaling_identities(std::string &why)
{
	testsupport::Rng rng(20240811);
	for (int trial = 0; trial < 50; ++trial)
	{
		auto f = rng.series(10);
		auto rep = verify_ftxfx(f, rng.rational(), 10);
		if (!rep.pass)
		{
			why = "scale identity failed: " + rep.subject;
			return false;
		}
	}
	for (int trial = 0; trial < 50; ++trial)
	{
		int k = rng.uniform(0, 10);
		auto f = rng.series(k);
		auto rep = verify_pfk_mult(f, rng.rational(), rng.rational(), k);
		if (!rep.pass)
		{
			why = "multiplicativity failed at k=" + std::to_string(k);
			return false;
		}
	}
	return true;
}

bool triple_agreement(std::string &why)
{
	testsupport::Rng rng(20240812);
	for (int trial = 0; trial < 50; ++trial)
	{
		int k = rng.uniform(0, 10);
		auto f = rng.series(k);
		auto det = pfk_determinant(f, k).poly;
		auto rec = pfk_recursion(f, k).poly;
		auto conv = pfk_convolution(f, k).poly;
		if (det != rec || rec != conv)
		{
			why = "paths disagree at k=" + std::to_string(k);
			return false;
		}
		// Fraction-free cross-check: the bordered determinant evaluated at
		// k+1 points via Bareiss elimination pins the same polynomial.
		auto A = pfk_matrix(f, k);
		int n = k + 1;
		for (int t0 = 0; t0 <= k; ++t0)
		{
			std::vector<std::vector<Rational>> M(
			    static_cast<std::size_t>(n),
			    std::vector<Rational>(static_cast<std::size_t>(n)));
			for (int r = 0; r < n; ++r)
				for (int c = 0; c < n; ++c)
					M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
					    A.at(r, c).evaluate(Rational(t0));
			Rational d = testsupport::bareiss_det(M);
			if (k % 2 != 0)
				d = -d;
			if (d != rec.evaluate(Rational(t0)))
			{
				why = "Bareiss value differs at k=" + std::to_string(k) +
				      ", t=" + std::to_string(t0);
				return false;
			}
		}
	}
	return true;
}

bool general_conjugation(std::string &why)
{
	const int N = 6;
	for (const char *name : {"exp", "geom"})
	{
		auto f = name[0] == 'e' ? exp_series<Rational>(N) : geom_series<Rational>(N);
		if (!verify_general_conjugation(f, N).pass)
		{
			why = std::string("failed on ") + name;
			return false;
		}
	}
	if (!verify_general_conjugation(qexp_series(N), N).pass)
	{
		why = "failed on qexp";
		return false;
	}
	testsupport::Rng rng(20240813);
	for (int trial = 0; trial < 20; ++trial)
		if (!verify_general_conjugation(rng.series(N, true), N).pass)
		{
			why = "failed on random all-nonzero series";
			return false;
		}

	// A vanishing a_k must be refused on the root-data route while the
	// direct route still reproduces the conjugation product.
	auto gap = explicit_series<Rational>({Rational(1), Rational(1), Rational(0)}, 4);
	bool refused = false;
	try
	{
		(void)root_symmetrics(gap, 2);
	}
	catch (const kit_error &e)
	{
		refused = e.code() == errc::vanishing_leading_coeff;
	}
	if (!refused)
	{
		why = "vanishing leading coefficient was not refused";
		return false;
	}
	if (!verify_zk_conjugation(gap, 4).pass)
	{
		why = "direct route failed on a series with a vanishing coefficient";
		return false;
	}
	return true;
}

bool qexp_identities(std::string &why)
{
	auto fact = verify_qexp_factorization(8);
	if (!fact.pass)
	{
		why = "factorization report failed";
		return false;
	}
	for (int n = 0; n <= 4; ++n)
		if (!verify_qexp_shift(n, 8).pass)
		{
			why = "shift identity failed at n=" + std::to_string(n);
			return false;
		}
	return true;
}

bool hall_littlewood(std::string &why)
{
	if (!verify_hall_littlewood(4, 6).pass)
	{
		why = "oracle comparison failed";
		return false;
	}
	for (int m = 1; m <= 4; ++m)
		for (int k = 0; k <= 6; ++k)
			if (set_var_zero(hall_littlewood_Qk(m, k).value, m) !=
			    testsupport::complete_homogeneous(m, k))
			{
				why = "t=0 degeneration failed at m=" + std::to_string(m) +
				      ", k=" + std::to_string(k);
				return false;
			}
	for (int m = 1; m <= 3; ++m)
		for (int k = 0; k <= 6; ++k)
		{
			auto cut = drop_slot(set_var_zero(hall_littlewood_Qk(m + 1, k).value, m), m);
			if (cut != hall_littlewood_Qk(m, k).value)
			{
				why = "variable-count stability failed at m=" + std::to_string(m) +
				      ", k=" + std::to_string(k);
				return false;
			}
		}
	return true;
}

bool bracket_bridge(std::string &why)
{
	testsupport::Rng rng(20240814);
	for (int trial = 0; trial < 100; ++trial)
	{
		int k = rng.uniform(1, 6);
		std::vector<Rational> qs;
		for (int i = 0; i < k; ++i)
			qs.push_back(rng.rational());
		auto e = elementary_from_roots<Rational>(qs);
		if (nested_bracket<Rational>(qs, k + 1) !=
		    ad_q_power<Rational>(e, k, k + 1))
		{
			why = "bridge failed for a parameter list of length " + std::to_string(k);
			return false;
		}
	}
	return true;
}

bool cli_contract(std::string &why)
{
	for (const auto &c : testsupport::golden_cases())
	{
		auto outcome = testsupport::check_golden_case(ADJOINT_KIT_EXE, GOLDEN_DIR, c);
		if (!outcome.ok)
		{
			why = outcome.message;
			return false;
		}
	}
	return true;
}

} // namespace

int main()
{
	std::vector<Criterion> criteria{
	    {"classical conjugation slices match iterated commutators over k!", 1.0,
	     classical_conjugation},
	    {"scale and multiplicativity identities on random series", 10.0,
	     scaling_identities},
	    {"determinant, recursion and convolution paths agree (Bareiss-checked)",
	     10.0, triple_agreement},
	    {"general conjugation incl. qexp, random series and vanishing refusal",
	     15.0, general_conjugation},
	    {"q-exponential factorization, determinant and shift identities", 10.0,
	     qexp_identities},
	    {"Hall-Littlewood oracle match, t=0 and variable-count stability", 15.0,
	     hall_littlewood},
	    {"nested bracket bridge on random parameter lists", 5.0, bracket_bridge},
	    {"CLI golden files, byte-stable output and exit codes", 30.0, cli_contract},
	};

	int failures = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i)
	{
		const auto &c = criteria[i];
		std::string why;
		auto start = std::chrono::steady_clock::now();
		bool ok = c.run(why);
		double seconds =
		    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
		        .count();
		if (ok && seconds > c.budget_seconds)
		{
			ok = false;
			why = "over budget of " + std::to_string(c.budget_seconds) + "s";
		}
		std::printf("criterion %zu: %-68s %s (%.2fs)\n", i + 1, c.description,
		            ok ? "PASS" : "FAIL", seconds);
		if (!ok)
		{
			std::printf("  -> %s\n", why.c_str());
			++failures;
		}
	}
	if (failures)
		std::printf("%d of %zu criteria failed\n", failures, criteria.size());
	else
		std::printf("all %zu criteria passed\n", criteria.size());
	return failures == 0 ? 0 : 1;
}
