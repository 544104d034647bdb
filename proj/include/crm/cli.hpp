#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crm {

// Exit codes.
enum ExitCode { kOk = 0, kFailure = 1, kInputError = 2, kContradiction = 3, kUncertified = 4 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Golden runner over the bundled worked examples; `only` empty runs all items.
// Prints one PASS/FAIL line per item and returns true when all pass.
bool run_examples(const std::string& only, int n, const std::string& m, std::ostream& out);

}  // namespace crm
