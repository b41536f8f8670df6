#include "adjointkit/qspecial.hpp"

#include <cassert>

namespace adjointkit {

Polynomial<Rational> q_integer(int ell)
{
	assert(ell >= 0);
	std::vector<Rational> c(static_cast<std::size_t>(ell), Rational(1));
	return Polynomial<Rational>(std::move(c));
}

Polynomial<Rational> q_factorial(int k)
{
	assert(k >= 0);
	Polynomial<Rational> r(1);
	for (int ell = 1; ell <= k; ++ell)
		r *= q_integer(ell);
	return r;
}

} // namespace adjointkit
