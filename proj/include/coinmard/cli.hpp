#pragma once

#include <iosfwd>

namespace coinmard::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kResourceCap = 3,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coinmard::cli
