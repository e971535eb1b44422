#include "menage/menage.hpp"

#include <stdexcept>

namespace menage {

namespace {

Int exact_quotient(const Int& numerator, const Int& denominator, const char* where) {
  if (numerator % denominator != 0) {
    throw std::logic_error(std::string(where) + ": division is not exact");
  }
  return numerator / denominator;
}

void check_seat_range(int n, int r, const char* where) {
  if (n < 3) {
    throw std::invalid_argument(std::string(where) + ": n must be >= 3");
  }
  if (r < 3 || r > n) {
    throw std::invalid_argument(std::string(where) + ": r must be in [3, n]");
  }
}

}  // namespace

Int touchard_u(int n) {
  if (n < 2) {
    throw std::invalid_argument("touchard_u: n must be >= 2");
  }
  Int sum = 0;
  for (int k = 0; k <= n; ++k) {
    // (2n/(2n-k)) * C(2n-k, k) as the exact integer (2n * C(2n-k, k)) / (2n-k)
    const Int scaled = Int(2 * n) * binomial(2 * n - k, k);
    const Int coefficient = exact_quotient(scaled, Int(2 * n - k), "touchard_u");
    const Int term = coefficient * factorial(n - k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Int cayley_h(int n) {
  if (n < 2) {
    throw std::invalid_argument("cayley_h: n must be >= 2");
  }
  Int h_prev = 0;  // H_2
  Int h_curr = 1;  // H_3
  if (n == 2) return h_prev;
  if (n == 3) return h_curr;
  for (int k = 4; k <= n; ++k) {
    const Int numerator =
        Int(k) * (k - 2) * h_curr + Int(k) * h_prev + (k % 2 == 1 ? 4 : -4);
    Int h_next = exact_quotient(numerator, Int(k - 2), "cayley_h");
    h_prev = h_curr;
    h_curr = std::move(h_next);
  }
  return h_curr;
}

Int u_via_permanent(int n, const RyserOptions& options) {
  if (n < 2) {
    throw std::invalid_argument("u_via_permanent: n must be >= 2");
  }
  return permanent_ryser(menage_matrix(n), options);
}

Int menage_total(int n) {
  if (n < 3) {
    throw std::invalid_argument("menage_total: n must be >= 3");
  }
  return 2 * factorial(n) * touchard_u(n);
}

BinaryMatrix submatrix_A(int n, int r) {
  check_seat_range(n, r, "submatrix_A");
  return minor(minor(cycle_plus_identity(n), 1, r), n - 1, 1);
}

BinaryMatrix submatrix_B(int n, int r) {
  check_seat_range(n, r, "submatrix_B");
  // The (n-1, 1) cell of the minor is the wrap-around 1 from the last row,
  // so zero_entry's precondition always holds; a throw here is a bug.
  return zero_entry(minor(cycle_plus_identity(n), 1, r), n - 1, 1);
}

RookPolynomial fixed_seat_rook_polynomial(int n, int r) {
  check_seat_range(n, r, "fixed_seat_rook_polynomial");
  std::vector<Int> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k <= n - 1; ++k) {
    Int coefficient = 0;
    const int lo = std::max(r + k - n - 1, 0);
    const int hi = std::min(k, r - 2);
    for (int i = lo; i <= hi; ++i) {
      coefficient += binomial(2 * r - i - 4, i) * binomial(2 * (n - r) - k + i + 2, k - i);
    }
    c.push_back(std::move(coefficient));
  }
  return RookPolynomial(std::move(c));
}

Int fixed_seat_count(int n, int r) {
  check_seat_range(n, r, "fixed_seat_count");
  Int sum = 0;
  for (int k = 0; k <= n - 1; ++k) {
    Int inner = 0;
    const int lo = std::max(r + k - n - 1, 0);
    const int hi = std::min(k, r - 2);
    for (int i = lo; i <= hi; ++i) {
      inner += binomial(2 * r - i - 4, i) * binomial(2 * (n - r) - k + i + 2, k - i);
    }
    const Int term = factorial(n - k - 1) * inner;
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Int straight_table_count(int n, int r) {
  check_seat_range(n, r, "straight_table_count");
  Int sum = 0;
  for (int k = 0; k <= n - 2; ++k) {
    Int inner = 0;
    const int lo = std::max(r + k - n, 0);
    const int hi = std::min(k, r - 2);
    for (int i = lo; i <= hi; ++i) {
      inner += binomial(2 * r - i - 4, i) * binomial(2 * (n - r) - k + i + 1, k - i);
    }
    const Int term = factorial(n - k - 1) * inner;
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Int fixed_seat_count_r3(int n) {
  if (n < 3) {
    throw std::invalid_argument("fixed_seat_count_r3: n must be >= 3");
  }
  Int sum = 0;
  for (int k = 0; k <= n - 3; ++k) {
    const Int term = binomial(2 * n - k - 4, k) * factorial(n - k - 2) * (n - k - 2);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

MenageRecord compute_menage_record(int n, const RyserOptions& options) {
  MenageRecord record;
  record.n = n;
  record.u_touchard = touchard_u(n);
  record.u_cayley = cayley_h(n);
  record.u_permanent = u_via_permanent(n, options);
  if (record.u_touchard != record.u_cayley || record.u_touchard != record.u_permanent) {
    throw std::logic_error("compute_menage_record: methods disagree at n=" + std::to_string(n));
  }
  record.m_total = 2 * factorial(n) * record.u_touchard;
  return record;
}

FixedSeatRecord compute_fixed_seat_record(int n, int r, const RyserOptions& options) {
  check_seat_range(n, r, "compute_fixed_seat_record");
  FixedSeatRecord record;
  record.n = n;
  record.r = r;
  record.distance = r - 1;
  record.count_formula = fixed_seat_count(n, r);
  record.count_permanent = permanent_ryser(minor(menage_matrix(n), 1, r), options);
  return record;
}

}  // namespace menage
