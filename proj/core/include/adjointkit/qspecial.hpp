#pragma once

#include "adjointkit/polynomial.hpp"
#include "adjointkit/rational.hpp"

namespace adjointkit {

/// [l]_q = 1 + q + ... + q^(l-1); [0]_q = 0.
Polynomial<Rational> q_integer(int ell);

/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
Polynomial<Rational> q_factorial(int k);

} // namespace adjointkit
