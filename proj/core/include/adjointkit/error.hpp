#pragma once

#include <stdexcept>
#include <string>

namespace adjointkit {

/// Error codes shared by the library and the CLI wire format.
enum class errc {
	domain_mismatch,
	division_by_zero,
	not_a_field,
	both_zero,
	nonunit_constant_term,
	k_exceeds_order,
	spec_domain_mismatch,
	bad_symmetrics,
	vanishing_leading_coeff,
	unknown_verb,
	bad_spec,
	bad_rational,
	order_too_small,
};

/// Stable machine-readable name, e.g. "DOMAIN_MISMATCH".
const char *errc_name(errc code) noexcept;

class kit_error : public std::runtime_error
{
  public:
	kit_error(errc code, std::string detail);

	errc code() const noexcept { return code_; }
	const std::string &detail() const noexcept { return detail_; }

  private:
	errc code_;
	std::string detail_;
};

} // namespace adjointkit
