#include "menage/rook.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace menage {

RookPolynomial::RookPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
  if (coefficients_.empty() || coefficients_[0] != 1) {
    throw std::logic_error("RookPolynomial: v_0 must be 1");
  }
}

Int RookPolynomial::coefficient(std::size_t j) const {
  return j < coefficients_.size() ? coefficients_[j] : Int(0);
}

std::string RookPolynomial::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (j) out << ", ";
    out << coefficients_[j];
  }
  out << ']';
  return out.str();
}

RookPolynomial poly_product(const RookPolynomial& p, const RookPolynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return RookPolynomial(std::move(c));
}

RookPolynomial shift_and_add(const RookPolynomial& p, const RookPolynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Int> c(std::max(a.size() + 1, b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i + 1] += a[i];
  for (std::size_t j = 0; j < b.size(); ++j) c[j] += b[j];
  return RookPolynomial(std::move(c));
}

namespace {

// One step of the cell-deletion recursion on a connected board. The deleted
// branch drops the pivot's row and column; when the board has a single row
// or column that leaves no cells at all, i.e. the constant polynomial.
RookPolynomial connected_rook(const BinaryMatrix& m) {
  int pivot_i = 0;
  int pivot_j = 0;
  for (int i = 1; i <= m.rows() && !pivot_i; ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) {
        pivot_i = i;
        pivot_j = j;
        break;
      }
  if (!pivot_i) {
    return RookPolynomial();
  }
  RookPolynomial deleted = (m.rows() == 1 || m.cols() == 1)
                               ? RookPolynomial()
                               : rook_polynomial(minor(m, pivot_i, pivot_j));
  RookPolynomial zeroed = rook_polynomial(zero_entry(m, pivot_i, pivot_j));
  return shift_and_add(deleted, zeroed);
}

}  // namespace

RookPolynomial rook_polynomial(const BinaryMatrix& m) {
  RookPolynomial result;
  for (const BinaryMatrix& component : disjunct_components(m)) {
    result = poly_product(result, connected_rook(component));
  }
  return result;
}

RookPolynomial staircase_rook_polynomial(int k) {
  if (k < 0) {
    throw std::invalid_argument("staircase_rook_polynomial: k must be >= 0");
  }
  std::vector<Int> c;
  for (int i = 0; i <= (k + 1) / 2; ++i) {
    c.push_back(binomial(k - i + 1, i));
  }
  return RookPolynomial(std::move(c));
}

Int permanent_via_rook(const BinaryMatrix& m, int n) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("permanent_via_rook: matrix must be n x n");
  }
  const RookPolynomial r = rook_polynomial(m);
  Int sum = 0;
  for (std::size_t j = 0; j < r.coefficients().size(); ++j) {
    const Int term = r.coefficients()[j] * factorial(n - static_cast<long long>(j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

namespace {

void enumerate_placements(const std::vector<std::pair<int, int>>& cells, std::size_t start,
                          std::vector<char>& used_row, std::vector<char>& used_col, int depth,
                          std::vector<Int>& counts) {
  for (std::size_t t = start; t < cells.size(); ++t) {
    const auto [i, j] = cells[t];
    if (used_row[i] || used_col[j]) continue;
    if (static_cast<std::size_t>(depth) + 1 >= counts.size()) counts.emplace_back(0);
    counts[static_cast<std::size_t>(depth) + 1] += 1;
    used_row[i] = used_col[j] = 1;
    enumerate_placements(cells, t + 1, used_row, used_col, depth + 1, counts);
    used_row[i] = used_col[j] = 0;
  }
}

}  // namespace

RookPolynomial brute_force_rook_counts(const BinaryMatrix& m) {
  if (m.ones_count() > 24) {
    throw std::invalid_argument("brute_force_rook_counts: more than 24 ones");
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) cells.emplace_back(i, j);

  std::vector<Int> counts{Int(1)};
  std::vector<char> used_row(static_cast<std::size_t>(m.rows()) + 1, 0);
  std::vector<char> used_col(static_cast<std::size_t>(m.cols()) + 1, 0);
  enumerate_placements(cells, 0, used_row, used_col, 0, counts);
  return RookPolynomial(std::move(counts));
}

}  // namespace menage
