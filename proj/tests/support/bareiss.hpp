#pragma once

#include <cstdlib>
#include <vector>

#include "adjointkit/rational.hpp"

namespace testsupport {

using adjointkit::Rational;

/// Bareiss fraction-free elimination with row pivoting. An algorithmically
/// independent determinant used only to cross-check the Hessenberg recursion.
inline Rational bareiss_det(std::vector<std::vector<Rational>> m)
{
	std::size_t n = m.size();
	if (n == 0)
		return Rational(1);
	Rational sign(1);
	Rational prev(1);
	for (std::size_t i = 0; i + 1 < n; ++i)
	{
		if (adjointkit::is_zero(m[i][i]))
		{
			std::size_t p = i + 1;
			while (p < n && adjointkit::is_zero(m[p][i]))
				++p;
			if (p == n)
				return Rational(0);
			std::swap(m[i], m[p]);
			sign = -sign;
		}
		for (std::size_t r = i + 1; r < n; ++r)
			for (std::size_t c = i + 1; c < n; ++c)
				m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
		prev = m[i][i];
	}
	return sign * m[n - 1][n - 1];
}

} // namespace testsupport
