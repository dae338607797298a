#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swe {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the benchmark gates: balanced-state preservation in 1-D and 2-D,
// third-order convergence, tidal flow against the asymptotic solution, the
// paired well-balanced/baseline perturbation runs, dam break with and without
// friction against self-computed fine grids, the three steady hump flows, the
// 2-D perturbation with the mass audit, and the standing property suite.
// `only` restricts to the listed ids; empty runs everything. One line per
// criterion goes to `os` as it completes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {}, std::ostream* os = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace swe
