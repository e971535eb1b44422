#include "menage/permanent.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permanent/kernel.hpp"

namespace menage {

namespace {

using detail::Acc256;
using detail::RyserPlan;

using ChunkFn = void (*)(const RyserPlan&, std::uint64_t, std::uint64_t, Acc256&);

ChunkFn select_chunk_fn(PermanentKernel kernel) {
  switch (kernel) {
    case PermanentKernel::Scalar:
      return detail::ryser_chunk_scalar;
    case PermanentKernel::Avx2:
#if defined(MENAGE_HAVE_AVX2)
      if (detail::cpu_has_avx2()) return detail::ryser_chunk_avx2;
#endif
      throw std::runtime_error("permanent_ryser: AVX2 kernel not available on this build/CPU");
    case PermanentKernel::Auto:
#if defined(MENAGE_HAVE_AVX2)
      if (detail::cpu_has_avx2()) return detail::ryser_chunk_avx2;
#endif
      return detail::ryser_chunk_scalar;
  }
  return detail::ryser_chunk_scalar;
}

bool has_zero_line(const BinaryMatrix& m) {
  for (int i = 1; i <= m.rows(); ++i) {
    bool any = false;
    for (int j = 1; j <= m.cols(); ++j) any = any || m.at(i, j);
    if (!any) return true;
  }
  for (int j = 1; j <= m.cols(); ++j) {
    bool any = false;
    for (int i = 1; i <= m.rows(); ++i) any = any || m.at(i, j);
    if (!any) return true;
  }
  return false;
}

}  // namespace

bool permanent_kernel_available(PermanentKernel kernel) {
  switch (kernel) {
    case PermanentKernel::Auto:
    case PermanentKernel::Scalar:
      return true;
    case PermanentKernel::Avx2:
#if defined(MENAGE_HAVE_AVX2)
      return detail::cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

const char* permanent_kernel_name(PermanentKernel kernel) {
  switch (kernel) {
    case PermanentKernel::Auto:
      return "auto";
    case PermanentKernel::Scalar:
      return "scalar";
    case PermanentKernel::Avx2:
      return "avx2";
  }
  return "?";
}

Int permanent_ryser(const BinaryMatrix& m, const RyserOptions& options) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent_ryser: matrix must be square");
  }
  const int n = m.rows();
  if (n == 0) return 1;
  if (n > detail::kRyserMaxN) {
    throw std::invalid_argument("permanent_ryser: n must be <= 28");
  }
  if (has_zero_line(m)) return 0;

  const ChunkFn chunk_fn = select_chunk_fn(options.kernel);
  const RyserPlan plan = RyserPlan::build(m);
  const std::uint64_t subsets = std::uint64_t(1) << n;

  unsigned workers = std::max(1u, options.threads);
  workers = std::min<unsigned>(workers, std::max(1u, std::thread::hardware_concurrency()));
  // Below ~2^12 subsets the sweep is cheaper than thread startup.
  if (subsets < 4096) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, subsets));

  if (workers == 1) {
    Acc256 acc;
    chunk_fn(plan, 0, subsets, acc);
    return acc.to_int();
  }

  std::vector<std::future<Int>> parts;
  parts.reserve(workers);
  const std::uint64_t step = subsets / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * step;
    const std::uint64_t end = (w + 1 == workers) ? subsets : begin + step;
    parts.push_back(std::async(std::launch::async, [&plan, chunk_fn, begin, end] {
      Acc256 acc;
      chunk_fn(plan, begin, end, acc);
      return acc.to_int();
    }));
  }
  Int total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

Int permanent_brute(const BinaryMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent_brute: matrix must be square");
  }
  const int n = m.rows();
  if (n == 0) return 1;
  if (n > 8) {
    throw std::invalid_argument("permanent_brute: n must be <= 8");
  }
  std::vector<int> columns(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) columns[static_cast<std::size_t>(j)] = j + 1;
  long long count = 0;
  do {
    int product = 1;
    for (int i = 0; i < n && product; ++i) {
      product &= m.at(i + 1, columns[static_cast<std::size_t>(i)]);
    }
    count += product;
  } while (std::next_permutation(columns.begin(), columns.end()));
  return count;
}

}  // namespace menage
