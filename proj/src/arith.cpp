#include "menage/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace menage {

Int factorial(long long n) {
  if (n < 0) {
    throw std::logic_error("factorial: negative argument");
  }
  static std::mutex mutex;
  static std::vector<Int> cache = {Int(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long long>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<long long>(cache.size()));
  }
  return cache[static_cast<std::size_t>(n)];
}

Int binomial(long long a, long long b) {
  if (a < 0) {
    throw std::logic_error("binomial: negative upper argument");
  }
  if (b < 0 || b > a) {
    return 0;
  }
  return factorial(a) / (factorial(b) * factorial(a - b));
}

std::string to_decimal(const Int& value) { return value.str(); }

}  // namespace menage
