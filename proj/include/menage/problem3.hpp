#pragma once

#include <map>
#include <optional>
#include <vector>

#include "menage/menage.hpp"

namespace menage {

// Per-n verdict on whether the fixed-seat count depends on the chosen chair,
// together with the divisibility condition (n-2) | U_n. If the count is
// constant it must equal U_n / (n-2), so is_constant implies divides.
struct Problem3Report {
  int n = 0;
  std::map<int, Int> counts;  // r -> fixed-seat count, r in [3, n]
  bool is_constant = false;
  std::optional<Int> common_value;  // present iff is_constant
  bool divides = false;             // (n-2) | U_n
  std::optional<Int> quotient;      // U_n / (n-2), present iff divides
};

inline constexpr int kDefaultScanGuard = 18;

// Computes counts for r = 3..floor((n+3)/2) and mirrors the rest through the
// r <-> n-r+3 symmetry; asserts the report invariants (sum of counts = U_n,
// constancy implies divisibility). n >= 3.
Problem3Report analyze(int n);

// Reports for each n in [n_min, n_max], ascending. Requires
// 3 <= n_min <= n_max <= guard. Distinct n may be analyzed concurrently;
// the result order is deterministic.
std::vector<Problem3Report> scan(int n_min, int n_max, int guard = kDefaultScanGuard,
                                 unsigned workers = 1);

}  // namespace menage
