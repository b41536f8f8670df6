#include "adjointkit/ring.hpp"

namespace adjointkit {

std::string ring_spec_name(const RingSpec &spec)
{
	switch (spec.tag)
	{
	case ring_tag::rational:
		return "RATIONAL";
	case ring_tag::ratfunc_q:
		return "RATFUNC_Q";
	case ring_tag::multipoly:
		return "MULTIPOLY(" + std::to_string(spec.arity) + ")";
	}
	return "?";
}

void require_same_domain(const RingSpec &a, const RingSpec &b)
{
	if (!(a == b))
		throw kit_error(errc::domain_mismatch, "operands live in " + ring_spec_name(a) +
		                                           " and " + ring_spec_name(b));
}

void require_field(const RingSpec &spec)
{
	if (!spec.is_field())
		throw kit_error(errc::not_a_field,
		                ring_spec_name(spec) + " is a ring, not a field");
}

} // namespace adjointkit
