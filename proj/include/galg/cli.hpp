#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace galg::cli {

enum ExitCode : int { ok = 0, input_error = 1, consistency_violation = 2, budget_exceeded = 3 };

struct RunConfig {
  std::string command;
  /// Builder descriptors; `scan` accepts any number, the rest exactly one
  /// unless `table` is given.
  std::vector<std::string> groups;
  std::string table;
  std::optional<std::size_t> nvars;
  std::vector<std::string> equations;
  std::string system;
  bool coefficients = false;
  std::size_t target_power = 1;
  std::optional<std::size_t> maxlen;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::uint64_t singleton_limit = 4096;
  /// Raw points, entries separated by ';' (element names or indices).
  std::vector<std::string> tuples;
  std::string format = "text";
  std::size_t jobs = 1;
  bool timing = false;

  /// Throws InputError.
  void validate() const;
};

/// Runs one subcommand; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs it.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace galg::cli
