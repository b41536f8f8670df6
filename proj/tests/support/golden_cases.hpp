#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "proc.hpp"

namespace testsupport {

struct GoldenCase {
	const char *file;  // expected-output file inside the golden directory
	const char *args;  // arguments after the program name
	const char *env;   // environment prefix, e.g. "ADJOINT_KIT_ORDER=4", or ""
	int expected_exit;
	bool check_stable; // also require byte-identical output across two runs
};

/// One case per verb plus the documented failure modes.
inline const std::vector<GoldenCase> &golden_cases()
{
	static const std::vector<GoldenCase> cases{
	    {"pfk_exp_k3.json", "pfk --series exp --k 3", "", 0, true},
	    {"pfk_qexp_k2_rec.txt", "pfk --series qexp --k 2 --method rec --format text",
	     "", 0, false},
	    {"pfk_exp_env4.json", "pfk --series exp", "ADJOINT_KIT_ORDER=4", 0, false},
	    {"invert_geom.json", "invert --series geom --order 5", "", 0, false},
	    {"conjugate_poly11.json", "conjugate --series poly:1,1 --order 2", "", 0,
	     true},
	    {"roots_qexp_k3.json", "roots --series qexp --k 3", "", 0, false},
	    {"hl_m2_k2.json", "hl --m 2 --k 2", "", 0, true},
	    {"verify_conjugation_exp.json",
	     "verify --identity conjugation --series exp --order 6", "", 0, false},
	    {"verify_ftxfx_geom.json",
	     "verify --identity ftxfx --series geom --order 6 --t 1/3", "", 0, false},
	    {"verify_pfk_mult_exp.json",
	     "verify --identity pfk-mult --series exp --k 4 --s 2 --t 3", "", 0, false},
	    {"verify_qexp_fact_k4.json", "verify --identity qexp-factorization --k 4",
	     "", 0, false},
	    {"verify_qexp_shift_n2.json",
	     "verify --identity qexp-shift --n 2 --order 6", "", 0, false},
	    {"verify_hl_m2_k3.json", "verify --identity hall-littlewood --m 2 --k 3",
	     "", 0, false},
	    {"claim_mutated.json",
	     "verify --identity pfk-claim --series exp --k 3 "
	     "--claim -1/6,1/2,-1/2,1/5",
	     "", 1, true},
	    {"error_vanishing.json",
	     "verify --identity conjugation --series poly:1,1,0 --order 2", "", 2,
	     false},
	    {"error_badspec.json", "pfk --series poly:2,1", "", 2, false},
	};
	return cases;
}

inline std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

struct GoldenOutcome {
	bool ok = true;
	std::string message;
};

/// Runs one case against the built binary and the frozen golden file.
inline GoldenOutcome check_golden_case(const std::string &exe,
                                       const std::string &golden_dir,
                                       const GoldenCase &c)
{
	std::string cmd = std::string(c.env) + (c.env[0] ? " " : "") + exe + " " + c.args;
	ProcResult run = run_process(cmd);
	if (run.exit_code != c.expected_exit)
		return {false, std::string(c.file) + ": expected exit " +
		                   std::to_string(c.expected_exit) + ", got " +
		                   std::to_string(run.exit_code)};
	std::string want = read_file(golden_dir + "/" + c.file);
	if (want.empty())
		return {false, std::string(c.file) + ": golden file missing or empty"};
	if (run.out != want)
		return {false, std::string(c.file) + ": output differs from golden file"};
	if (c.check_stable)
	{
		ProcResult again = run_process(cmd);
		if (again.out != run.out)
			return {false, std::string(c.file) + ": output not byte-stable"};
	}
	return {};
}

} // namespace testsupport
