// AVX2 variant of the Ryser sweep: row sums live in one 32-lane byte vector,
// the zero test is a compare+movemask, and the term product is a widening
// multiply tree (8 -> 16 -> 32 -> 64 bit lanes). Compiled with -mavx2 and
// only dispatched to after a runtime cpuid check.

#include "permanent/kernel.hpp"

#if defined(MENAGE_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace menage::detail {

namespace {

// Product of all 32 byte lanes (pad lanes hold 1) as 3 little-endian limbs.
// Lane values are < 32, so: pairs < 2^10 (u16), quads < 2^20 (u32),
// groups of 8 < 2^40 (u64), halves < 2^80 (u128), total < 2^140.
inline void product_limbs_avx2(__m256i sums, std::uint64_t out[3]) {
  const __m128i lo_bytes = _mm256_castsi256_si128(sums);
  const __m128i hi_bytes = _mm256_extracti128_si256(sums, 1);
  const __m256i lo16 = _mm256_cvtepu8_epi16(lo_bytes);
  const __m256i hi16 = _mm256_cvtepu8_epi16(hi_bytes);
  const __m256i pairs16 = _mm256_mullo_epi16(lo16, hi16);

  const __m256i a32 = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(pairs16));
  const __m256i b32 = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(pairs16, 1));
  const __m256i quads32 = _mm256_mullo_epi32(a32, b32);

  const __m256i odd32 = _mm256_srli_epi64(quads32, 32);
  const __m256i octs64 = _mm256_mul_epu32(quads32, odd32);

  alignas(32) std::uint64_t q[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(q), octs64);

  const unsigned __int128 half0 = static_cast<unsigned __int128>(q[0]) * q[1];
  const unsigned __int128 half1 = static_cast<unsigned __int128>(q[2]) * q[3];

  const std::uint64_t a0 = static_cast<std::uint64_t>(half0);
  const std::uint64_t a1 = static_cast<std::uint64_t>(half0 >> 64);
  const std::uint64_t b0 = static_cast<std::uint64_t>(half1);
  const std::uint64_t b1 = static_cast<std::uint64_t>(half1 >> 64);

  const unsigned __int128 t00 = static_cast<unsigned __int128>(a0) * b0;
  const unsigned __int128 t01 = static_cast<unsigned __int128>(a0) * b1;
  const unsigned __int128 t10 = static_cast<unsigned __int128>(a1) * b0;
  const unsigned __int128 t11 = static_cast<unsigned __int128>(a1) * b1;

  out[0] = static_cast<std::uint64_t>(t00);
  const unsigned __int128 mid = (t00 >> 64) + t01 + t10;
  out[1] = static_cast<std::uint64_t>(mid);
  out[2] = static_cast<std::uint64_t>((mid >> 64) + t11);
}

}  // namespace

void ryser_chunk_avx2(const RyserPlan& plan, std::uint64_t begin, std::uint64_t end, Acc256& acc) {
  if (begin >= end) return;
  const int n = plan.n;

  const auto column = [&plan](int j) {
    return _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(plan.column_bytes[static_cast<std::size_t>(j)].data()));
  };

  // Pad lanes start at 1 and no column touches them, so they never trip the
  // zero test and contribute factor 1 to the product.
  alignas(32) std::uint8_t init[32];
  for (int i = 0; i < 32; ++i) init[i] = i < n ? 0 : 1;
  __m256i sums = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));

  const std::uint64_t start_subset = gray(begin);
  for (int j = 0; j < n; ++j) {
    if ((start_subset >> j) & 1) {
      sums = _mm256_add_epi8(sums, column(j));
    }
  }
  int sign = ((n - std::popcount(start_subset)) & 1) ? -1 : 1;

  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t limbs[3];
  for (std::uint64_t t = begin;;) {
    const int zero_mask = _mm256_movemask_epi8(_mm256_cmpeq_epi8(sums, zero));
    if (zero_mask == 0) {
      product_limbs_avx2(sums, limbs);
      if (sign > 0) {
        acc.add(limbs);
      } else {
        acc.sub(limbs);
      }
    }
    if (++t >= end) break;
    const int j = std::countr_zero(t);
    if ((gray(t) >> j) & 1) {
      sums = _mm256_add_epi8(sums, column(j));
    } else {
      sums = _mm256_sub_epi8(sums, column(j));
    }
    sign = -sign;
  }
}

}  // namespace menage::detail

#endif  // MENAGE_HAVE_AVX2
