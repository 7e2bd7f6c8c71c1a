#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epiclo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

// args excludes the program name. JSON goes to `out`, a short summary to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace epiclo::cli
