#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tough {

// Command-line driver, separated from main() so tests can drive it with
// captured streams. Exit codes: 0 success / "yes", 1 decision "no" or failed
// verify run, 2 usage or input error, 3 size-cap refusal (incl. undecided
// heuristic outcomes).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tough
