#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibcensus {

// Dispatches one command line. Returns 0 on success, 1 on domain/validation
// failures, 2 on usage errors. Output is deterministic for fixed inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibcensus
