#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hppk::cli {

/// Runs one command line (without the program name). Returns the process
/// exit status: 0 success or accept, 1 signature reject or KAT mismatch,
/// 2 malformed input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hppk::cli
