#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace baire::cli {

// Outcome of one command. Inconclusive marks an honestly undecided search
// (depth or fuel ran out), distinct from error; exit codes are 0/1/2 for
// ok/error/inconclusive, except where a subcommand documents a boolean
// mirror.
struct CommandResult {
  enum class Status { Ok, Error, Inconclusive };
  Status status = Status::Ok;
  nlohmann::json payload;
  std::vector<std::string> diagnostics;
  int exit_code = 0;
  std::string format = "json";  // requested rendering: json|text
};

// Routes one invocation (without the program name) to its subcommand.
CommandResult dispatch(const std::vector<std::string>& argv);

// Renders the result per its requested format.
std::string render(const CommandResult& result);

// Full pipeline for main(): dispatch, print, return the exit code.
int run_main(int argc, char** argv);

}  // namespace baire::cli
