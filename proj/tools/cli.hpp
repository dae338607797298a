#pragma once

#include <optional>
#include <string>
#include <vector>

namespace swe::cli {

// Resolved command-line configuration for the `run` and `orders` subcommands;
// unset options fall back to the scenario catalog defaults.
struct RunConfig {
  std::string command;  // run | orders | suite
  std::string scenario;
  std::optional<int> nx, ny;
  std::optional<double> cfl, t_final, friction_m, detector_threshold;
  std::string limiter = "hr";             // hr | none
  std::string well_balanced = "on";       // on | off
  std::string remainder_correction = "on";
  std::string output;
  std::string log_path;
  bool with_reference = false;
  std::vector<int> only;  // suite: restrict criteria
};

// Exit codes: 0 success, 1 solver failure or failed suite criterion,
// 2 malformed command line.
int run_cli(int argc, const char* const* argv);

}  // namespace swe::cli
