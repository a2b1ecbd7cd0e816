#pragma once

// The batch commands behind the `foliate` executable. Each returns a human
// report and a deterministic key=value sidecar.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliate/problem.hpp"

namespace foliate {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 1,
  kExitNegative = 2,
  kExitInconclusive = 3,
  kExitResource = 4,
};

/// Command-line overrides of the problem file.
struct CommandOptions {
  std::optional<std::size_t> max_steps;
  std::optional<std::uint32_t> degree_bound;
  bool audit = false;
  std::optional<std::uint64_t> seed;
};

struct Report {
  std::string command;
  int exit_code = kExitSuccess;
  std::string human;
  /// Sidecar fields in emission order.
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  std::string sidecar() const;
};

Report cmd_resolve(const ProblemSpec& spec, const CommandOptions& options = {});
Report cmd_ring(const ProblemSpec& spec, const CommandOptions& options = {});
Report cmd_toric(const ProblemSpec& spec, const CommandOptions& options = {});
/// Without a problem, every instance draws its own random foliation.
Report cmd_wcheck(const std::optional<ProblemSpec>& spec, const CommandOptions& options = {});
Report cmd_divisor(std::size_t r, std::size_t i);
Report cmd_section(const ProblemSpec& spec, const CommandOptions& options = {});

/// Runs a command by name, mapping errors to exit codes 1 and 4.
Report run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& options);

}  // namespace foliate
