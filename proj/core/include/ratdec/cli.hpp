#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratdec {

// Entry point of the command-line tool; args exclude the program name.
// Returns the process exit code: 0 success (including a non-composite
// verdict), 1 bad input, 2 retries exhausted, 3 internal failure.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratdec
