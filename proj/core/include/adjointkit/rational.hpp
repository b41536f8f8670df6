#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace adjointkit {

// Expression templates are switched off so that a + b is again a value of the
// same type, which keeps the ring-generic templates simple.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline bool is_zero(const Rational &r) { return r.is_zero(); }

/// Canonical text form: "num/den" with positive denominator, "3" for 3/1.
std::string coeff_str(const Rational &r);

/// Parses the canonical text form. Throws kit_error(errc::bad_rational).
Rational parse_rational(std::string_view text);

} // namespace adjointkit
