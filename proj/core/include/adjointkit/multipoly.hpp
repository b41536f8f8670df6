#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adjointkit/rational.hpp"

namespace adjointkit {

/// Exponent vector, one slot per variable, trailing zero slots trimmed so a
/// constant is the empty vector. Serialization pads back to the domain arity.
using ExpVec = std::vector<std::uint32_t>;

/// Graded lexicographic: lower total degree first, ties broken by comparing
/// exponents slot by slot (x1 slot first, missing slots read as zero).
struct GradedLexLess {
	bool operator()(const ExpVec &a, const ExpVec &b) const;
};

/// Sparse multivariate polynomial over Rational. Slots 0..m-1 hold x_1..x_m;
/// slot m holds the Hall-Littlewood parameter t when present.
class MultiPoly
{
  public:
	using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

	MultiPoly() = default;
	MultiPoly(int c) : MultiPoly(Rational(c)) {}
	MultiPoly(Rational c);

	static MultiPoly var(int slot);

	const TermMap &terms() const { return terms_; }
	bool zero() const { return terms_.empty(); }
	/// Number of slots needed to hold every exponent vector.
	int width() const;

	MultiPoly operator-() const;
	friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b);
	friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b);
	friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
	MultiPoly &operator+=(const MultiPoly &o) { return *this = *this + o; }
	MultiPoly &operator-=(const MultiPoly &o) { return *this = *this - o; }
	MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

	friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

	void add_term(ExpVec exps, const Rational &c);

  private:
	TermMap terms_;
};

inline bool is_zero(const MultiPoly &p) { return p.zero(); }

/// e_k(x_1..x_m); 1 for k = 0, 0 for k > m.
MultiPoly elementary_symmetric(int m, int k);

/// Substitutes 0 for the variable in the given slot (drops every term that
/// uses it). Slot numbering is unchanged.
MultiPoly set_var_zero(const MultiPoly &p, int slot);

/// Removes a slot no term uses, shifting higher slots down by one.
MultiPoly drop_slot(const MultiPoly &p, int slot);

/// Descending canonical-order text with variables x1..xm and t for slot m,
/// e.g. "x1^2*x2 - 2*x1*x2*t". The arity m fixes which slot prints as t.
std::string multipoly_text(const MultiPoly &p, int m);

} // namespace adjointkit
