#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tough::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kBadGraph6 = 2;
inline constexpr int kHypothesis = 3;
inline constexpr int kOtherError = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tough::cli
