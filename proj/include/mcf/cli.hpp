#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcf::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace mcf::cli
