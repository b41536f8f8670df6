#include <doctest.h>

#include "support/golden_cases.hpp"

TEST_CASE("command-line golden files")
{
	for (const auto &c : testsupport::golden_cases())
	{
		CAPTURE(c.file);
		auto outcome = testsupport::check_golden_case(ADJOINT_KIT_EXE, GOLDEN_DIR, c);
		INFO(outcome.message);
		CHECK(outcome.ok);
	}
}
