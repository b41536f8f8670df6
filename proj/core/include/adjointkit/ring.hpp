#pragma once

#include <concepts>
#include <string>

#include "adjointkit/error.hpp"
#include "adjointkit/rational.hpp"

namespace adjointkit {

/// Commutative ring with unit, exact arithmetic, and value semantics.
/// Models: Rational, Polynomial<R>, RationalFunction, MultiPoly.
template <typename R>
concept Ring = std::regular<R> && requires(const R &a, const R &b) {
	R(0);
	R(1);
	{ a + b } -> std::convertible_to<R>;
	{ a - b } -> std::convertible_to<R>;
	{ a * b } -> std::convertible_to<R>;
	{ -a } -> std::convertible_to<R>;
	{ is_zero(a) } -> std::convertible_to<bool>;
};

/// Ring whose nonzero elements are invertible (Rational, RationalFunction).
template <typename R>
concept Field = Ring<R> && requires(const R &a, const R &b) {
	{ a / b } -> std::convertible_to<R>;
};

enum class ring_tag { rational, ratfunc_q, multipoly };

/// Runtime selector of the coefficient domain used by the CLI dispatch.
struct RingSpec {
	ring_tag tag = ring_tag::rational;
	int arity = 0; // m for multipoly (variables x_1..x_m plus t)

	static RingSpec rational() { return {ring_tag::rational, 0}; }
	static RingSpec ratfunc_q() { return {ring_tag::ratfunc_q, 0}; }
	static RingSpec multipoly(int m)
	{
		if (m < 1)
			throw kit_error(errc::bad_spec, "MULTIPOLY arity must be >= 1, got " +
			                                    std::to_string(m));
		return {ring_tag::multipoly, m};
	}

	bool is_field() const { return tag != ring_tag::multipoly; }

	friend bool operator==(const RingSpec &, const RingSpec &) = default;
};

std::string ring_spec_name(const RingSpec &spec);

/// Throws DOMAIN_MISMATCH unless both operands come from the same domain.
void require_same_domain(const RingSpec &a, const RingSpec &b);

/// Throws NOT_A_FIELD when division is requested in a non-field domain.
void require_field(const RingSpec &spec);

} // namespace adjointkit
