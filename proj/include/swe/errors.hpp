#pragma once

#include <stdexcept>
#include <string>

namespace swe {

// Invalid grids, scenario names, boundary specs, CLI input.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime failures of a simulation (NaN, dry state).
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Water depth fell below the configured dry guard h_min.
struct DryStateError : SolverError {
  explicit DryStateError(const std::string& what) : SolverError(what) {}
};

}  // namespace swe
