#include "menage/problem3.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace menage {

Problem3Report analyze(int n) {
  if (n < 3) {
    throw std::invalid_argument("analyze: n must be >= 3");
  }
  Problem3Report report;
  report.n = n;
  for (int r = 3; r <= (n + 3) / 2; ++r) {
    Int value = fixed_seat_count(n, r);
    report.counts[n - r + 3] = value;  // mirror seat, same count
    report.counts[r] = std::move(value);
  }

  report.is_constant = true;
  const Int& first = report.counts.at(3);
  Int sum = 0;
  for (const auto& [r, value] : report.counts) {
    report.is_constant = report.is_constant && value == first;
    sum += value;
  }
  if (report.is_constant) {
    report.common_value = first;
  }

  const Int u = touchard_u(n);
  if (sum != u) {
    throw std::logic_error("analyze: fixed-seat counts do not sum to U_n at n=" + std::to_string(n));
  }
  report.divides = u % (n - 2) == 0;
  if (report.divides) {
    report.quotient = u / (n - 2);
  }
  if (report.is_constant && (!report.divides || *report.common_value != *report.quotient)) {
    throw std::logic_error("analyze: constant counts must equal U_n/(n-2) at n=" + std::to_string(n));
  }
  return report;
}

std::vector<Problem3Report> scan(int n_min, int n_max, int guard, unsigned workers) {
  if (n_min < 3 || n_min > n_max || n_max > guard) {
    throw std::invalid_argument("scan: need 3 <= n_min <= n_max <= guard");
  }
  const int count = n_max - n_min + 1;
  std::vector<Problem3Report> reports(static_cast<std::size_t>(count));
  if (workers <= 1) {
    for (int n = n_min; n <= n_max; ++n) {
      reports[static_cast<std::size_t>(n - n_min)] = analyze(n);
    }
    return reports;
  }
  std::atomic<int> next{n_min};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  const unsigned pool_size = std::min<unsigned>(workers, static_cast<unsigned>(count));
  pool.reserve(pool_size);
  for (unsigned w = 0; w < pool_size; ++w) {
    pool.emplace_back([&] {
      try {
        for (int n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1)) {
          reports[static_cast<std::size_t>(n - n_min)] = analyze(n);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return reports;
}

}  // namespace menage
