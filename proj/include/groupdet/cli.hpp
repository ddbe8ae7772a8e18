#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groupdet/finite_group.hpp"

namespace groupdet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kLibraryError = 3 };

// Catalog key, or a path to a JSON file {"order": n, "table": [[...]], "names": [...]}.
GroupPtr load_group(const std::string& source);
GroupPtr group_from_json(const std::string& text);

// Runs the command line (argv[0] is the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupdet::cli
