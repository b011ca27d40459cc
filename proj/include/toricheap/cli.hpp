#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricheap::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

// Runs one invocation; args exclude the program name. A word argument of
// "-" and a graph path of "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricheap::cli
