#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regui::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSpecErrors = 1;    // validate found errors; engine refused the spec
inline constexpr int kBadInput = 2;      // unreadable or unparseable file
inline constexpr int kBadFlags = 3;      // missing, unknown or conflicting flags

// Runs one command. `args` excludes the program name. The success stream
// receives only the machine-readable document; messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regui::cli
