#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoconn::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 for domain and limit errors (a JSON error object is written
/// to `err`), 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoconn::cli
