#include <bit>

#include "permanent/kernel.hpp"

namespace menage::detail {

RyserPlan RyserPlan::build(const BinaryMatrix& m) {
  RyserPlan plan;
  plan.n = m.rows();
  plan.column_rows.resize(static_cast<std::size_t>(plan.n));
  plan.column_bytes.assign(static_cast<std::size_t>(plan.n), {});
  for (int j = 1; j <= plan.n; ++j) {
    for (int i = 1; i <= plan.n; ++i) {
      if (m.at(i, j)) {
        plan.column_rows[static_cast<std::size_t>(j - 1)].push_back(i - 1);
        plan.column_bytes[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = 1;
      }
    }
  }
  return plan;
}

Int Acc256::to_int() const {
  const bool negative = (w[3] >> 63) != 0;
  std::uint64_t limbs[4] = {w[0], w[1], w[2], w[3]};
  if (negative) {
    // two's-complement negate
    unsigned __int128 c = 1;
    for (auto& limb : limbs) {
      c += static_cast<unsigned __int128>(~limb);
      limb = static_cast<std::uint64_t>(c);
      c >>= 64;
    }
  }
  Int v = 0;
  for (int i = 3; i >= 0; --i) {
    v <<= 64;
    v += limbs[i];
  }
  return negative ? -v : v;
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

void ryser_chunk_scalar(const RyserPlan& plan, std::uint64_t begin, std::uint64_t end, Acc256& acc) {
  if (begin >= end) return;
  const int n = plan.n;
  std::int32_t sums[32] = {0};
  int zero_rows = n;

  const std::uint64_t start_subset = gray(begin);
  for (int j = 0; j < n; ++j) {
    if ((start_subset >> j) & 1) {
      for (int row : plan.column_rows[static_cast<std::size_t>(j)]) {
        if (sums[row]++ == 0) --zero_rows;
      }
    }
  }
  // term sign is (-1)^(n - |S|)
  int sign = ((n - std::popcount(start_subset)) & 1) ? -1 : 1;

  std::uint64_t limbs[3];
  for (std::uint64_t t = begin;;) {
    if (zero_rows == 0) {
      product_limbs(sums, n, limbs);
      if (sign > 0) {
        acc.add(limbs);
      } else {
        acc.sub(limbs);
      }
    }
    if (++t >= end) break;
    const int j = std::countr_zero(t);
    const int direction = ((gray(t) >> j) & 1) ? 1 : -1;
    for (int row : plan.column_rows[static_cast<std::size_t>(j)]) {
      sums[row] += direction;
      if (sums[row] == 0) {
        ++zero_rows;
      } else if (sums[row] == direction) {
        --zero_rows;
      }
    }
    sign = -sign;
  }
}

}  // namespace menage::detail
