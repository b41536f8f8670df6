#pragma once

#include "adjointkit/freealg.hpp"
#include "adjointkit/pfk.hpp"

namespace adjointkit {

/// Checks f(x) y f(x)^{-1} = y + sum_k a_k (ad x)^{q_k}(y) degree by degree,
/// with the right-hand side built from root_symmetrics, and cross-checks each
/// slice against zk_terms. Requires a_k != 0 for k = 1..N.
template <Field R>
IdentityReport verify_general_conjugation(const TruncatedSeries<R> &f, int N)
{
	auto conj = conjugate_series(f, N);
	auto zk = zk_terms(f, N);
	IdentityReport rep;
	rep.identity = "conjugation";
	for (int k = 1; k <= N; ++k)
	{
		auto sym = root_symmetrics(f, k);
		auto rhs = ad_q_power<R>(sym.e, k, N + 1) * f.coeff(k);
		auto lhs = length_slice(conj, k + 1);
		const auto &z = zk.per_degree[static_cast<std::size_t>(k - 1)];
		bool ok = lhs == rhs && lhs == z;
		rep.add(k, "x-degree " + std::to_string(k), free_text(lhs), free_text(rhs), ok);
	}
	return rep;
}

/// Same identity without the nonvanishing hypothesis: compares zk_terms
/// against the direct conjugation only.
template <Ring R>
IdentityReport verify_zk_conjugation(const TruncatedSeries<R> &f, int N)
{
	auto conj = conjugate_series(f, N);
	auto zk = zk_terms(f, N);
	IdentityReport rep;
	rep.identity = "conjugation";
	for (int k = 1; k <= N; ++k)
	{
		auto lhs = length_slice(conj, k + 1);
		const auto &z = zk.per_degree[static_cast<std::size_t>(k - 1)];
		rep.add(k, "x-degree " + std::to_string(k), free_text(lhs), free_text(z),
		        lhs == z);
	}
	return rep;
}

} // namespace adjointkit
