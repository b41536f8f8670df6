#include "adjointkit/rational.hpp"

#include <cctype>

#include "adjointkit/error.hpp"

namespace adjointkit {

std::string coeff_str(const Rational &r)
{
	std::string s = numerator(r).str();
	if (denominator(r) != 1)
	{
		s += '/';
		s += denominator(r).str();
	}
	return s;
}

Rational parse_rational(std::string_view text)
{
	auto fail = [&](const char *why) -> Rational {
		throw kit_error(errc::bad_rational,
		                std::string(why) + " in \"" + std::string(text) + "\"");
	};

	auto digits = [](std::string_view s) {
		if (s.empty())
			return false;
		for (char c : s)
			if (!std::isdigit(static_cast<unsigned char>(c)))
				return false;
		return true;
	};

	std::string_view num = text, den;
	if (auto slash = text.find('/'); slash != std::string_view::npos)
	{
		num = text.substr(0, slash);
		den = text.substr(slash + 1);
		if (!digits(den))
			return fail("denominator must be a positive integer");
	}

	bool neg = false;
	if (!num.empty() && (num.front() == '-' || num.front() == '+'))
	{
		neg = num.front() == '-';
		num.remove_prefix(1);
	}
	if (!digits(num))
		return fail("malformed numerator");

	Int n{std::string(num)};
	if (neg)
		n = -n;
	Int d = den.empty() ? Int(1) : Int{std::string(den)};
	if (d == 0)
		return fail("zero denominator");
	return Rational(n, d);
}

} // namespace adjointkit
