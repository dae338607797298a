// Acceptance gate: runs every benchmark criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit status is nonzero if any fail.

#include <cstring>
#include <iostream>
#include <vector>

#include "swe/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0) continue;
    only.push_back(std::atoi(argv[i]));
  }
  const auto results = swe::run_acceptance(only, &std::cout);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED")
            << " (" << results.size() << " run)\n";
  return failed == 0 && !results.empty() ? 0 : 1;
}
