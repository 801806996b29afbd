#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dimer/moduli_fan.hpp"

namespace dimer {

enum class Stage { Validate, Matchings, Fan, Labels, Chamber, Psi };

struct RunConfig {
  std::string input;
  std::string theta = "special";  // or comma separated fractions p/q
  std::vector<Stage> stages;      // reports to write
  std::string out_dir = ".";
  bool svg = false;
};

enum ExitCode { kSuccess = 0, kValidationFailure = 1, kNonGeneric = 2, kCrossCheckFailure = 3 };

std::optional<std::vector<Stage>> parse_command(std::string_view command);
std::string to_string(Stage s);

StabilityParam parse_theta(const std::string& text, int num_vertices);

// Writes <stage>.json (and SVGs when requested) into out_dir; diagnostics go
// to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace dimer
