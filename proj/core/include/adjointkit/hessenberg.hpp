#pragma once

#include <cassert>
#include <vector>

#include "adjointkit/ring.hpp"

namespace adjointkit {

/// Dense square matrix holder for the upper-Hessenberg determinants. Entries
/// below the first subdiagonal must stay zero.
template <Ring R> class HessenbergMatrix
{
  public:
	explicit HessenbergMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, R(0)) {}

	int size() const { return n_; }
	R &at(int r, int c)
	{
		assert(r >= 0 && r < n_ && c >= 0 && c < n_);
		assert(r <= c + 1);
		return a_[static_cast<std::size_t>(r) * n_ + c];
	}
	const R &at(int r, int c) const
	{
		assert(r >= 0 && r < n_ && c >= 0 && c < n_);
		return a_[static_cast<std::size_t>(r) * n_ + c];
	}

  private:
	int n_;
	std::vector<R> a_;
};

/// Determinant of an upper-Hessenberg matrix by the leading-principal-minor
/// recursion: with p_0 = 1,
///   p_m = sum_{r=1..m} (-1)^(m-r) A[r-1][m-1] (prod_{j=r..m-1} A[j][j-1]) p_{r-1}.
/// Division-free, O(n^2) ring multiplications.
template <Ring R> R hessenberg_det(const HessenbergMatrix<R> &A)
{
	int n = A.size();
	std::vector<R> p;
	p.reserve(static_cast<std::size_t>(n) + 1);
	p.push_back(R(1));
	for (int m = 1; m <= n; ++m)
	{
		R acc(0);
		R subprod(1);
		bool plus = true;
		for (int r = m; r >= 1; --r)
		{
			R term = A.at(r - 1, m - 1) * subprod * p[static_cast<std::size_t>(r) - 1];
			acc = plus ? acc + term : acc - term;
			if (r > 1)
			{
				subprod = subprod * A.at(r - 1, r - 2);
				plus = !plus;
			}
		}
		p.push_back(std::move(acc));
	}
	return p.back();
}

} // namespace adjointkit
