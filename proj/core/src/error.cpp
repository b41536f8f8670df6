#include "adjointkit/error.hpp"

namespace adjointkit {

const char *errc_name(errc code) noexcept
{
	switch (code)
	{
	case errc::domain_mismatch:
		return "DOMAIN_MISMATCH";
	case errc::division_by_zero:
		return "DIVISION_BY_ZERO";
	case errc::not_a_field:
		return "NOT_A_FIELD";
	case errc::both_zero:
		return "BOTH_ZERO";
	case errc::nonunit_constant_term:
		return "NONUNIT_CONSTANT_TERM";
	case errc::k_exceeds_order:
		return "K_EXCEEDS_ORDER";
	case errc::spec_domain_mismatch:
		return "SPEC_DOMAIN_MISMATCH";
	case errc::bad_symmetrics:
		return "BAD_SYMMETRICS";
	case errc::vanishing_leading_coeff:
		return "VANISHING_LEADING_COEFF";
	case errc::unknown_verb:
		return "UNKNOWN_VERB";
	case errc::bad_spec:
		return "BAD_SPEC";
	case errc::bad_rational:
		return "BAD_RATIONAL";
	case errc::order_too_small:
		return "ORDER_TOO_SMALL";
	}
	return "UNKNOWN";
}

kit_error::kit_error(errc code, std::string detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code),
      detail_(std::move(detail))
{
}

} // namespace adjointkit
