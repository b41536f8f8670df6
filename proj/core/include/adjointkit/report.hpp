#pragma once

#include <string>
#include <vector>

namespace adjointkit {

/// One compared pair inside an identity check. `index` is the degree or k the
/// line refers to; `lhs`/`rhs` are the two independently computed values.
struct ReportLine {
	int index = 0;
	std::string label;
	std::string lhs;
	std::string rhs;
	bool ok = true;
};

/// Structured outcome of a verification run. `subject` names the series or
/// parameters the identity was checked on, for counterexample payloads.
struct IdentityReport {
	std::string identity;
	std::string subject;
	bool pass = true;
	std::vector<ReportLine> lines;

	/// Records one compared pair; equality is decided by the caller on the
	/// exact values, the strings are for human and JSON output.
	void add(int index, std::string label, std::string lhs, std::string rhs, bool ok)
	{
		lines.push_back({index, std::move(label), std::move(lhs), std::move(rhs), ok});
		pass = pass && ok;
	}
};

} // namespace adjointkit
