#pragma once

#include "menage/arith.hpp"
#include "menage/matrix.hpp"

namespace menage {

// Kernel used for the Ryser subset sweep. Auto picks the widest variant the
// CPU supports at runtime; requesting an unavailable kernel throws.
enum class PermanentKernel { Auto, Scalar, Avx2 };

struct RyserOptions {
  PermanentKernel kernel = PermanentKernel::Auto;
  // Number of workers for partitioning the subset sweep. The partition is
  // deterministic: contiguous Gray-code ranges reduced in range order.
  unsigned threads = 1;
};

bool permanent_kernel_available(PermanentKernel kernel);
const char* permanent_kernel_name(PermanentKernel kernel);

// Exact per(M) for square (0,1) M with n <= 28, by inclusion-exclusion over
// column subsets visited in Gray-code order (row sums update one column at a
// time). The empty 0x0 matrix has permanent 1; a zero row or column short-
// circuits to 0.
Int permanent_ryser(const BinaryMatrix& m, const RyserOptions& options = {});

// Oracle: exact per(M) by full permutation enumeration, n <= 8.
Int permanent_brute(const BinaryMatrix& m);

}  // namespace menage
