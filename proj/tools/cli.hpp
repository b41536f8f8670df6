#pragma once

#include <string>
#include <vector>

#include "adjointkit/rational.hpp"
#include "adjointkit/series.hpp"

namespace adjointkit::cli {

/// A fully resolved invocation: defaults filled in, every value validated.
/// to_argv() emits the canonical flag form; re-parsing it reproduces the
/// Command exactly.
struct Command {
	std::string verb;
	std::string identity;         // verify only
	SeriesSpec spec;              // series-based verbs/identities
	bool uses_series = false;
	int k = -1;
	bool uses_k = false;
	int order = 0;
	bool uses_order = false;
	std::string method = "all";   // pfk only
	bool uses_method = false;
	std::string t_text;           // "q" or a rational literal
	bool uses_t = false;
	std::string s_text;
	bool uses_s = false;
	int n = -1;                   // qexp-shift
	bool uses_n = false;
	int m = -1;                   // hl / hall-littlewood
	bool uses_m = false;
	std::vector<Rational> claim;  // pfk-claim
	bool uses_claim = false;
	std::string format = "json";

	std::vector<std::string> to_argv() const;

	friend bool operator==(const Command &, const Command &) = default;
};

/// Parses and validates argv tokens (without the program name). Throws
/// kit_error with UNKNOWN_VERB / BAD_SPEC / BAD_RATIONAL / ORDER_TOO_SMALL.
Command parse_command(const std::vector<std::string> &args, int default_order);

struct RunResult {
	int exit_code = 0;
	std::string out; // machine-readable payload
	std::string err; // human diagnostics
};

/// Executes a Command. Exit code 0: success / identity verified; 1: identity
/// failed (counterexample payload on out); 2: usage or domain error (error
/// JSON on out).
RunResult run_command(const Command &c);

/// Convenience: parse then run; parse errors become exit-2 results.
RunResult run_main(const std::vector<std::string> &args, int default_order);

/// Reads ADJOINT_KIT_ORDER; falls back to 8. Throws ORDER_TOO_SMALL on a
/// malformed or negative value.
int default_order_from_env();

} // namespace adjointkit::cli
