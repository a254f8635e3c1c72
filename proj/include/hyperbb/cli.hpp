#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbb::cli {

struct CommandResult {
  int exit_code = 0;    // 0 success, 1 domain/runtime error, 2 usage error
  std::string payload;  // what was written to the output stream
};

// Runs one CLI invocation.  `args` excludes the program name.  Payload goes
// to `out`, diagnostics to `err`; the payload is written in one piece after
// the command finishes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Convenience wrapper capturing the payload; diagnostics are appended to
// *diagnostics when given.
CommandResult run_command(const std::vector<std::string>& args,
                          std::string* diagnostics = nullptr);

}  // namespace hyperbb::cli
