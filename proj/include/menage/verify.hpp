#pragma once

#include <string>
#include <utility>
#include <vector>

#include "menage/matrix.hpp"

namespace menage {

// Outcome of one identity family: how many checks ran, how many failed, and
// a short description of the first failure (empty when none).
struct VerifyFamilyResult {
  std::string family;
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
};

// Runs every cross-identity family over sizes up to max_n (families with a
// tighter intrinsic guard clamp themselves; an empty range yields zero
// checks). Deterministic: fixed RNG seeds, results ordered by family.
std::vector<VerifyFamilyResult> run_verification(int max_n, unsigned workers = 1);

// The staircase boards displayed in several orientations, as (k, board)
// pairs; shared by the verification suite and the tests.
std::vector<std::pair<int, BinaryMatrix>> staircase_gallery();

}  // namespace menage
