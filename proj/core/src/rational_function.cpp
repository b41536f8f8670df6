#include "adjointkit/rational_function.hpp"

#include "adjointkit/error.hpp"

namespace adjointkit {

namespace {

std::string q_poly_text(const Polynomial<Rational> &p)
{
	return poly_text<Rational>(p, "q", [](const Rational &c) { return coeff_str(c); });
}

} // namespace

RationalFunction::RationalFunction(Polynomial<Rational> num, Polynomial<Rational> den)
    : num_(std::move(num)), den_(std::move(den))
{
	if (den_.zero())
		throw kit_error(errc::division_by_zero, "rational function with zero denominator");
	if (num_.zero())
	{
		den_ = Polynomial<Rational>(1);
		return;
	}
	auto g = poly_gcd(num_, den_);
	if (g.degree() > 0)
	{
		num_ = poly_exact_div(num_, g);
		den_ = poly_exact_div(den_, g);
	}
	Rational lc = den_.leading();
	if (lc != 1)
	{
		Rational inv = Rational(1) / lc;
		num_ = num_ * inv;
		den_ = den_ * inv;
	}
}

RationalFunction RationalFunction::operator-() const
{
	RationalFunction r = *this;
	r.num_ = -r.num_;
	return r;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
	return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
	return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
	return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
{
	if (b.zero())
		throw kit_error(errc::division_by_zero, "division by the zero rational function");
	return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const
{
	auto parenthesize = [](std::string s) {
		if (s.find(' ') != std::string::npos)
			s = "(" + s + ")";
		return s;
	};
	std::string n = q_poly_text(num_);
	if (is_polynomial())
		return n;
	return parenthesize(std::move(n)) + "/" + parenthesize(q_poly_text(den_));
}

} // namespace adjointkit
