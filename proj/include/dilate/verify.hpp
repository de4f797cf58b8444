#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dilate {

struct CheckTally {
  std::size_t passed = 0;
  std::size_t total = 0;
};

/// Outcome of the exhaustive identity suite over all tuples with
/// 2 <= length <= max_k + 1 and entries in 1..max_m.
struct GridSummary {
  int max_k = 0;
  int max_m = 0;
  std::size_t tuples = 0;
  std::size_t prefixes = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<std::string> failures;  // first few offending cases

  bool all_passed() const { return failures.empty(); }
  std::string to_text() const;
};

GridSummary verify_grid(int max_k, int max_m);

}  // namespace dilate
