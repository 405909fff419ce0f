#pragma once

// Subcommands as functions: a workspace and options in, text and an exit code
// out. The command-line tool and the Python module are thin shells over this.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogkit/io.hpp"
#include "cogkit/iso.hpp"

namespace cogkit {

enum ExitCode : int { kPositive = 0, kNegative = 1, kMalformed = 2 };

struct Options {
  std::vector<std::string> paths;  // files or directories; "fixtures" when empty
  std::optional<std::string> cog;
  std::optional<std::string> scwol;
  std::optional<std::string> mor;
  std::optional<std::string> vertex;  // object label, or index when no label matches
  std::string tree = "bfs";           // "bfs" or a file listing tree morphisms
  std::optional<std::string> format;  // json | off | cas | plain
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t budget = kDefaultSearchBudget;
};

struct Outcome {
  int exit_code = kPositive;
  std::string output;  // the document written to stdout or --emit
  std::string error;   // one line for stderr, set when exit_code is kMalformed
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Errors are caught and reported in the outcome.
Outcome run_command(const std::string& command, const Options& options);

}  // namespace cogkit
