#pragma once

#include "adjointkit/multipoly.hpp"
#include "adjointkit/qspecial.hpp"
#include "adjointkit/report.hpp"
#include "adjointkit/series.hpp"

namespace adjointkit {

/// Checks, for each k = 1..k_max over Q(q):
///   - the three P_{f,k} paths for the q-exponential against the closed form
///     (t-1)(t-q)...(t-q^{k-1}) / [k]_q!,
///   - the bordered determinant with 1/[j]_q! entries against
///     (1-t)(q-t)...(q^{k-1}-t) / [k]_q!,
///   - the vanishing P_k(q^a) = 0 for 0 <= a < k.
IdentityReport verify_qexp_factorization(int k_max);

/// Checks e_q^{q^n x} = e_q^x * B_n at order N, where B_n truncates the shift
/// series at degree n, and that B_n equals the expanded product
/// prod_{i=1..n} (1 + (q-1) q^{i-1} x).
IdentityReport verify_qexp_shift(int n, int N);

/// One-row Hall-Littlewood polynomial in x_1..x_m with parameter t, stored
/// over the polynomial ring with m+1 slots (slot m holds t).
struct HLResult {
	int m = 0;
	int k = 0;
	MultiPoly value;
};

/// Q_(k)(x_1..x_m; t) via the recursion for P_{f,k} with a_j = (-1)^j e_j(x).
HLResult hall_littlewood_Qk(int m, int k);

/// The u^k coefficient of prod_i (1 - x_i t u) / (1 - x_i u), expanded with
/// plain geometric series; shares no code with the pfk_* paths.
HLResult hl_oracle(int m, int k);

/// Compares hall_littlewood_Qk against hl_oracle for all m <= m_max,
/// k <= k_max.
IdentityReport verify_hall_littlewood(int m_max, int k_max);

} // namespace adjointkit
