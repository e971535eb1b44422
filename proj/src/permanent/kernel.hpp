#pragma once

// Internal interface shared by the Ryser sweep kernels. Not installed.
//
// Numeric layout, for n <= 28:
//   - every row sum is <= n <= 28 < 2^5, so a group of 12 row sums has
//     product < 2^60 (fits u64) and the full product fits 192 bits;
//   - a chunk accumulates at most 2^28 terms of magnitude < 2^140, so a
//     signed 256-bit two's-complement accumulator cannot overflow.

#include <array>
#include <cstdint>
#include <vector>

#include "menage/arith.hpp"
#include "menage/matrix.hpp"

namespace menage::detail {

inline constexpr int kRyserMaxN = 28;

// Column-oriented view of the matrix consumed by the kernels.
struct RyserPlan {
  int n = 0;
  std::vector<std::vector<int>> column_rows;            // 0-based row indices of 1s, per column
  std::vector<std::array<std::uint8_t, 32>> column_bytes;  // byte i = M(i+1, j+1), padded with 0

  static RyserPlan build(const BinaryMatrix& m);
};

// Signed 256-bit accumulator, little-endian limbs, two's complement.
struct Acc256 {
  std::uint64_t w[4] = {0, 0, 0, 0};

  void add(const std::uint64_t p[3]) {
    unsigned __int128 c;
    c = static_cast<unsigned __int128>(w[0]) + p[0];
    w[0] = static_cast<std::uint64_t>(c);
    c = (c >> 64) + w[1] + p[1];
    w[1] = static_cast<std::uint64_t>(c);
    c = (c >> 64) + w[2] + p[2];
    w[2] = static_cast<std::uint64_t>(c);
    w[3] += static_cast<std::uint64_t>(c >> 64);
  }

  void sub(const std::uint64_t p[3]) {
    unsigned __int128 b;
    b = static_cast<unsigned __int128>(w[0]) - p[0];
    w[0] = static_cast<std::uint64_t>(b);
    b = static_cast<unsigned __int128>(w[1]) - p[1] - ((b >> 64) & 1);
    w[1] = static_cast<std::uint64_t>(b);
    b = static_cast<unsigned __int128>(w[2]) - p[2] - ((b >> 64) & 1);
    w[2] = static_cast<std::uint64_t>(b);
    w[3] -= static_cast<std::uint64_t>((b >> 64) & 1);
  }

  Int to_int() const;
};

inline std::uint64_t gray(std::uint64_t t) { return t ^ (t >> 1); }

// Product of the first n row sums as 3 little-endian limbs. Row sums must be
// nonzero (callers skip zero terms) and < 32.
inline void product_limbs(const std::int32_t* sums, int n, std::uint64_t out[3]) {
  std::uint64_t group[3] = {1, 1, 1};
  for (int i = 0; i < n; ++i) {
    group[i / 12] *= static_cast<std::uint64_t>(sums[i]);
  }
  const unsigned __int128 p01 =
      static_cast<unsigned __int128>(group[0]) * group[1];
  const unsigned __int128 lo = static_cast<unsigned __int128>(static_cast<std::uint64_t>(p01)) * group[2];
  const unsigned __int128 hi = static_cast<unsigned __int128>(static_cast<std::uint64_t>(p01 >> 64)) * group[2];
  out[0] = static_cast<std::uint64_t>(lo);
  const unsigned __int128 mid = (lo >> 64) + hi;
  out[1] = static_cast<std::uint64_t>(mid);
  out[2] = static_cast<std::uint64_t>(mid >> 64);
}

// Accumulate the signed Ryser terms for subset indices t in [begin, end)
// (subset = gray(t)) into acc. Both kernels implement the same contract and
// are equivalence-tested against each other.
void ryser_chunk_scalar(const RyserPlan& plan, std::uint64_t begin, std::uint64_t end, Acc256& acc);

#if defined(MENAGE_HAVE_AVX2)
void ryser_chunk_avx2(const RyserPlan& plan, std::uint64_t begin, std::uint64_t end, Acc256& acc);
#endif

bool cpu_has_avx2();

}  // namespace menage::detail
