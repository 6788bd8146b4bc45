#pragma once

#include <ostream>
#include <span>
#include <string>

namespace fusioncell::cli {

// Runs one invocation; args excludes the program name. Data goes to `out`,
// progress and diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// File path, inline JSON, or a bare shorthand string.
std::string read_input(const std::string& arg);

}  // namespace fusioncell::cli
