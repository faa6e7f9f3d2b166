#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuntzcf::cli {

/// Process exit codes. No command returns anything else.
enum ExitCode : int {
  kOk = 0,          // success, or `equiv` found the inputs equivalent
  kFailure = 1,     // assertion failure, or `equiv` found them inequivalent
  kParseError = 2,  // malformed literal, bad flags, unreadable corpus file
  kDomainError = 3, // well-formed input outside the operation's domain
};

/// Runs one command line. `args` excludes the program name. A literal given
/// as `-` is read from the first nonblank line of `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cuntzcf::cli
