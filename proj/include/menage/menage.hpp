#pragma once

#include "menage/arith.hpp"
#include "menage/matrix.hpp"
#include "menage/permanent.hpp"
#include "menage/rook.hpp"

namespace menage {

// U_n (ways to seat the n men once the ladies sit alternately) by three
// independent routes, plus the total count M_n = 2 * n! * U_n. n is the
// total number of couples, the distinguished first man included.
struct MenageRecord {
  int n = 0;
  Int u_touchard;
  Int u_cayley;
  Int u_permanent;
  Int m_total;
};

// Count of seatings of the remaining n-1 men once man 1 takes chair r
// (allowed chairs are r = 3..n; the chair sits at distance r-1 from his
// wife), by closed formula and by the permanent of the corresponding minor.
struct FixedSeatRecord {
  int n = 0;
  int r = 0;
  int distance = 0;  // r - 1
  Int count_formula;
  Int count_permanent;
};

// Explicit alternating-sum formula for U_n:
//   sum_k (-1)^k * (2n/(2n-k)) * C(2n-k, k) * (n-k)!,
// evaluated in exact integer arithmetic (the division is always exact).
// n >= 2.
Int touchard_u(int n);

// Recursion H_2 = 0, H_3 = 1,
//   (n-2) H_n = n(n-2) H_{n-1} + n H_{n-2} + 4 (-1)^{n+1}   (n >= 4),
// with the exact division asserted. H_n = U_n. n >= 2.
Int cayley_h(int n);

// U_n as the permanent of the forbidden-positions matrix. n >= 2, within the
// permanent guard.
Int u_via_permanent(int n, const RyserOptions& options = {});

// M_n = 2 * n! * U_n. n >= 3.
Int menage_total(int n);

// The two boards produced by applying the cell-deletion step at position
// (n-1, 1) of (I_n + P) with row 1 and column r removed:
//   A: that minor with row n-1 and column 1 also removed, (n-2) x (n-2);
//   B: that minor with the (n-1, 1) cell zeroed, (n-1) x (n-1).
// A splits into a (2r-5)-staircase and a (2(n-r)-1)-staircase (the latter
// empty when r = n); B into a (2r-5)-staircase and a 2(n-r)-staircase.
// n >= 3, 3 <= r <= n.
BinaryMatrix submatrix_A(int n, int r);
BinaryMatrix submatrix_B(int n, int r);

// Closed form for the rook polynomial of (I_n + P) with row 1 and column r
// removed: c_k = sum_i C(2r-i-4, i) * C(2(n-r)-k+i+2, k-i) over
// i in [max(r+k-n-1, 0), min(k, r-2)], k = 0..n-1.
RookPolynomial fixed_seat_rook_polynomial(int n, int r);

// The fixed-seat count: sum_k (-1)^k (n-k-1)! c_k with c_k as above. Equals
// the permanent of the menage matrix with row 1 and column r removed.
Int fixed_seat_count(int n, int r);

// Straight-table variant: the wrap-around adjacency is absent, so the count
// is per(J_{n-1} - B), i.e.
//   sum_{k=0}^{n-2} (-1)^k (n-k-1)! sum_i C(2r-i-4, i) C(2(n-r)-k+i+1, k-i)
// with i in [max(r+k-n, 0), min(k, r-2)].
Int straight_table_count(int n, int r);

// Single-sum reduction of fixed_seat_count(n, 3):
//   sum_{k=0}^{n-3} (-1)^k C(2n-k-4, k) (n-k-2)! (n-k-2).
// n >= 3.
Int fixed_seat_count_r3(int n);

// Computes all three U_n routes and M_n; throws std::logic_error if the
// routes disagree (they are theorems, so a disagreement is a bug).
MenageRecord compute_menage_record(int n, const RyserOptions& options = {});

// Computes the formula and permanent routes; callers compare the fields.
FixedSeatRecord compute_fixed_seat_record(int n, int r, const RyserOptions& options = {});

}  // namespace menage
