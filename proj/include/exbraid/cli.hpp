#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "exbraid/rootdata.hpp"

namespace exbraid {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitMismatch = 3 };

struct RunConfig {
  std::string command;
  std::optional<Algebra> algebra;
  std::optional<int> ell;
  std::optional<std::pair<int, int>> ell_range;
  std::string object;
  std::string format = "table";
  std::string cache_dir;
  std::optional<int> jmax;
  unsigned threads = 0;
  bool normalize = false;
  bool tables = false;
  bool verdicts = false;
};

// Parses "A..B"; throws PreconditionError when malformed or empty.
std::pair<int, int> parse_ell_range(const std::string& s);

// Full CLI. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exbraid
