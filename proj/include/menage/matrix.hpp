#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace menage {

// Failure while reading the matrix text format. line/column are 1-based and
// point at the offending input position.
class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Dense rectangular (0,1) matrix with value semantics; all public indices are
// 1-based. The 0x0 matrix is a legal degenerate value (its permanent is 1 and
// its rook polynomial is the constant 1); every other shape has rows >= 1 and
// cols >= 1. Instances are plain values: copies are independent, and a
// constructed value is never mutated by library code, so sharing across
// threads is safe.
class BinaryMatrix {
 public:
  BinaryMatrix() : rows_(0), cols_(0) {}
  BinaryMatrix(int rows, int cols);

  // Row-major literal, mostly for tests: BinaryMatrix::from_rows({{1,0},{0,1}}).
  static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  int at(int i, int j) const;          // 1-based, range-checked
  void set(int i, int j, int value);   // value must be 0 or 1

  long long ones_count() const;

  BinaryMatrix transpose() const;
  BinaryMatrix flip_rows() const;  // reverse row order
  BinaryMatrix flip_cols() const;  // reverse column order

  // Text format: first line "R C", then R lines of exactly C characters from
  // {0,1}. to_text always ends with a newline; from_text accepts a missing
  // trailing newline and tolerates CRLF line ends.
  std::string to_text() const;
  static BinaryMatrix from_text(std::string_view text);

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;  // row-major

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
  }
  void check_bounds(int i, int j) const;
};

// n x n incidence matrix of the seatings forbidden to the n men: 0 at (i,i)
// and (i, i+1 mod n) (with (n, n+1) meaning (n,1)), 1 elsewhere. n >= 2.
BinaryMatrix menage_matrix(int n);

// Bitwise complement of menage_matrix(n): 1 exactly at (i,i) and
// (i, i+1 mod n). n >= 2.
BinaryMatrix cycle_plus_identity(int n);

// Delete row i and column j, preserving the order of the rest. Defined for
// matrices with rows >= 2 and cols >= 2, and for the 1x1 matrix (giving the
// empty matrix); deleting the only row of a multi-column matrix would leave
// a 0xk shape, which is not a legal value.
BinaryMatrix minor(const BinaryMatrix& m, int i, int j);

// Replace the 1 at (i,j) by 0; signals std::domain_error if the cell is
// already 0.
BinaryMatrix zero_entry(const BinaryMatrix& m, int i, int j);

// Flip every bit (complement within the all-ones matrix of the same shape).
BinaryMatrix complement_in_J(const BinaryMatrix& m);

// The canonical k-staircase: the zig-zag cells (1,1),(1,2),(2,2),(2,3),...
// truncated to k cells, in a ceil(k/2) x (floor(k/2)+1) matrix. k >= 1.
BinaryMatrix canonical_staircase(int k);

// Partition the 1-cells into connected components under "shares a row or a
// column"; each component is returned as the submatrix induced by its
// occupied rows and columns (in ascending index order), components ordered by
// their first 1-cell in row-major order. An all-zero matrix has no
// components.
std::vector<BinaryMatrix> disjunct_components(const BinaryMatrix& m);

// Block-diagonal placement of two matrices (no shared rows or columns).
BinaryMatrix block_diagonal(const BinaryMatrix& a, const BinaryMatrix& b);

// Reads a matrix in the text format from a file; wraps parse failures in
// MatrixParseError and filesystem failures in std::runtime_error.
BinaryMatrix read_matrix_file(const std::string& path);

}  // namespace menage
