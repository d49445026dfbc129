#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbitalg::cli {

enum ExitCode : int { kPass = 0, kClaimFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;  // validate | verify | probe
  std::string claim;    // prop1 | thm2 | heisenberg | nilpotent-ideals | nonexact | lemma | simplicity
  std::string algebra;  // built-in name or path to a JSON definition
  std::optional<int> n;
  std::optional<std::string> casimir;
  std::optional<std::string> relation;
  std::optional<std::string> orbit_type;
  std::uint32_t max_degree = 3;
  std::uint32_t k = 1;
  std::vector<std::string> gens;
  std::string target = "1";
  bool all_pairs = false;
  bool json = false;
  std::uint64_t seed = 0;
};

// Parses argv into a config, or returns the exit code to use (help output
// gives kPass, bad usage gives kUsageError).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err);

// Runs one command; the report goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace orbitalg::cli
