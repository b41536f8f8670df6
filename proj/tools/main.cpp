#include <iostream>
#include <vector>

#include "adjointkit/json_io.hpp"
#include "cli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	adjointkit::cli::RunResult r;
	try
	{
		int default_order = adjointkit::cli::default_order_from_env();
		r = adjointkit::cli::run_main(args, default_order);
	}
	catch (const adjointkit::kit_error &e)
	{
		r = {2, adjointkit::json_error(e.code(), e.detail()),
		     std::string("error: ") + e.what() + "\n"};
	}
	std::cout << r.out;
	std::cerr << r.err;
	return r.exit_code;
}
