#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "menage/arith.hpp"
#include "menage/matrix.hpp"

namespace menage {

// Coefficient sequence v_0, v_1, ..., v_m where v_j counts placements of j
// pairwise non-attacking rooks on the 1-cells of a board. Stored in
// normalized form: v_0 = 1 always, and the last stored coefficient is
// nonzero (except for the constant polynomial [1]).
class RookPolynomial {
 public:
  RookPolynomial() : coefficients_{Int(1)} {}
  explicit RookPolynomial(std::vector<Int> coefficients);

  const std::vector<Int>& coefficients() const { return coefficients_; }
  // v_j; reads as 0 beyond the stored length.
  Int coefficient(std::size_t j) const;
  std::size_t degree() const { return coefficients_.size() - 1; }

  std::string to_string() const;  // "[1, 5, 6, 1]"

  bool operator==(const RookPolynomial& other) const = default;

 private:
  std::vector<Int> coefficients_;
};

// Exact convolution of coefficient sequences (boards placed disjunctly).
RookPolynomial poly_product(const RookPolynomial& p, const RookPolynomial& q);

// x*p + q as coefficient sequences; the combination produced by the
// delete-the-cell recursion, so q's constant term keeps v_0 = 1.
RookPolynomial shift_and_add(const RookPolynomial& p, const RookPolynomial& q);

// Rook polynomial of an arbitrary (0,1) matrix: split into disjunct
// components, expand each by the cell-deletion recursion (pivot: first
// 1-cell in row-major order), multiply the parts. Result is independent of
// the pivot choice. Empty and all-zero matrices give [1].
RookPolynomial rook_polynomial(const BinaryMatrix& m);

// Closed form for any k-staircase board: v_i = C(k-i+1, i). k >= 0.
RookPolynomial staircase_rook_polynomial(int k);

// per(J_n - M) for square n x n M, evaluated through M's rook polynomial:
// sum_j (-1)^j v_j (n-j)!.
Int permanent_via_rook(const BinaryMatrix& m, int n);

// Independent oracle: v_j by exhaustive enumeration of j-subsets of 1-cells
// with pairwise distinct rows and columns. Guarded to ones_count <= 24.
RookPolynomial brute_force_rook_counts(const BinaryMatrix& m);

}  // namespace menage
