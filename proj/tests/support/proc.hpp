#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct ProcResult {
	int exit_code = -1;
	std::string out;
};

/// Runs a shell command, capturing stdout (stderr is dropped).
inline ProcResult run_process(const std::string &cmdline)
{
	std::string full = cmdline + " 2>/dev/null";
	FILE *pipe = popen(full.c_str(), "r");
	if (pipe == nullptr)
		throw std::runtime_error("popen failed for: " + cmdline);
	ProcResult res;
	std::array<char, 4096> buf{};
	std::size_t got = 0;
	while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		res.out.append(buf.data(), got);
	int status = pclose(pipe);
	res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return res;
}

} // namespace testsupport
