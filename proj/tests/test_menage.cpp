#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "menage/menage.hpp"
#include "test_util.hpp"

using menage::BinaryMatrix;
using menage::Int;
using test_util::poly;
using test_util::trim_empty;

namespace {

const Int kSequence[] = {0, 1, 2, 13, 80, 579, 4738, 43387, 439792, 4890741, 59216642};

}  // namespace

TEST_CASE("touchard_u") {
  CHECK(menage::touchard_u(2) == 0);
  CHECK(menage::touchard_u(7) == 579);
  CHECK(menage::touchard_u(12) == 59216642);
  CHECK_THROWS_AS(menage::touchard_u(1), std::invalid_argument);
  for (int n = 2; n <= 12; ++n) CHECK(menage::touchard_u(n) == kSequence[n - 2]);
}

TEST_CASE("cayley_h") {
  CHECK(menage::cayley_h(2) == 0);
  CHECK(menage::cayley_h(3) == 1);
  CHECK(menage::cayley_h(4) == 2);
  CHECK(menage::cayley_h(11) == 4890741);
  CHECK_THROWS_AS(menage::cayley_h(0), std::invalid_argument);
  for (int n = 2; n <= 12; ++n) CHECK(menage::cayley_h(n) == kSequence[n - 2]);
}

TEST_CASE("u_via_permanent") {
  CHECK(menage::u_via_permanent(4) == 2);
  CHECK(menage::u_via_permanent(9) == 43387);
  for (int n = 2; n <= 12; ++n) CHECK(menage::u_via_permanent(n) == menage::touchard_u(n));
}

TEST_CASE("menage_total") {
  CHECK(menage::menage_total(3) == 12);
  CHECK(menage::menage_total(4) == 96);
  CHECK(menage::menage_total(5) == 3120);
  CHECK_THROWS_AS(menage::menage_total(2), std::invalid_argument);
}

TEST_CASE("records assemble with their invariants") {
  const menage::MenageRecord record = menage::compute_menage_record(5);
  CHECK(record.u_touchard == 13);
  CHECK(record.u_cayley == 13);
  CHECK(record.u_permanent == 13);
  CHECK(record.m_total == 3120);

  const menage::FixedSeatRecord seat = menage::compute_fixed_seat_record(10, 3);
  CHECK(seat.distance == 2);
  CHECK(seat.count_formula == 54888);
  CHECK(seat.count_permanent == 54888);
}

TEST_CASE("submatrix_A and submatrix_B match the displayed boards for n=10, r=5") {
  CHECK(menage::submatrix_A(10, 5) == BinaryMatrix::from_text(
                                          "8 8\n"
                                          "11000000\n"
                                          "01100000\n"
                                          "00100000\n"
                                          "00010000\n"
                                          "00011000\n"
                                          "00001100\n"
                                          "00000110\n"
                                          "00000011\n"));
  CHECK(menage::submatrix_B(10, 5) == BinaryMatrix::from_text(
                                          "9 9\n"
                                          "011000000\n"
                                          "001100000\n"
                                          "000100000\n"
                                          "000010000\n"
                                          "000011000\n"
                                          "000001100\n"
                                          "000000110\n"
                                          "000000011\n"
                                          "000000001\n"));
  CHECK_THROWS_AS(menage::submatrix_A(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(menage::submatrix_B(10, 11), std::invalid_argument);
}

TEST_CASE("submatrix components match the displayed parts for n=10, r=5") {
  const auto a_parts = menage::disjunct_components(menage::submatrix_A(10, 5));
  REQUIRE(a_parts.size() == 2);
  CHECK(a_parts[0] == BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(a_parts[1] == BinaryMatrix::from_rows({{1, 0, 0, 0, 0},
                                               {1, 1, 0, 0, 0},
                                               {0, 1, 1, 0, 0},
                                               {0, 0, 1, 1, 0},
                                               {0, 0, 0, 1, 1}}));

  const auto b_parts = menage::disjunct_components(menage::submatrix_B(10, 5));
  REQUIRE(b_parts.size() == 2);
  // The first part is displayed with an all-zero leading column; components
  // come back trimmed to their occupied rows and columns.
  CHECK(b_parts[0] ==
        trim_empty(BinaryMatrix::from_rows({{0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}})));
  CHECK(b_parts[1] == BinaryMatrix::from_rows({{1, 0, 0, 0, 0},
                                               {1, 1, 0, 0, 0},
                                               {0, 1, 1, 0, 0},
                                               {0, 0, 1, 1, 0},
                                               {0, 0, 0, 1, 1},
                                               {0, 0, 0, 0, 1}}));
}

TEST_CASE("submatrix structure across the full range") {
  for (int n = 3; n <= 12; ++n) {
    for (int r = 3; r <= n; ++r) {
      // the zeroed cell is always a 1 before zeroing, or submatrix_B throws
      CHECK_NOTHROW(menage::submatrix_B(n, r));
      const BinaryMatrix a = menage::submatrix_A(n, r);
      const BinaryMatrix b = menage::submatrix_B(n, r);
      CHECK(a.rows() == n - 2);
      CHECK(b.rows() == n - 1);
      CHECK(a.ones_count() == (r < n ? 2 * n - 6 : 2 * n - 5));
      CHECK(b.ones_count() == 2 * n - 5);
      const auto a_parts = menage::disjunct_components(a);
      const auto b_parts = menage::disjunct_components(b);
      CHECK(a_parts.size() == (r < n ? 2u : 1u));
      CHECK(b_parts.size() == (r < n ? 2u : 1u));
      CHECK(a_parts[0].ones_count() == 2 * r - 5);
      CHECK(b_parts[0].ones_count() == 2 * r - 5);
      if (r < n) {
        CHECK(a_parts[1].ones_count() == 2 * (n - r) - 1);
        CHECK(b_parts[1].ones_count() == 2 * (n - r));
      }
    }
  }
}

TEST_CASE("fixed_seat_rook_polynomial") {
  for (int n = 3; n <= 12; ++n)
    for (int r = 3; r <= n; ++r) CHECK(menage::fixed_seat_rook_polynomial(n, r).coefficient(0) == 1);

  CHECK(menage::fixed_seat_rook_polynomial(3, 3) == poly({1, 2, 1}));
  CHECK(menage::brute_force_rook_counts(minor(menage::cycle_plus_identity(3), 1, 3)) ==
        poly({1, 2, 1}));
  CHECK(menage::fixed_seat_rook_polynomial(10, 5) ==
        menage::rook_polynomial(minor(menage::cycle_plus_identity(10), 1, 5)));
  CHECK_THROWS_AS(menage::fixed_seat_rook_polynomial(10, 2), std::invalid_argument);
}

TEST_CASE("fixed_seat_rook_polynomial factors into two staircases") {
  for (int n = 3; n <= 12; ++n) {
    for (int r = 3; r <= n; ++r) {
      CHECK(menage::fixed_seat_rook_polynomial(n, r) ==
            menage::poly_product(menage::staircase_rook_polynomial(2 * r - 5),
                                 menage::staircase_rook_polynomial(2 * (n - r) + 1)));
      CHECK(menage::fixed_seat_rook_polynomial(n, r) ==
            menage::shift_and_add(menage::rook_polynomial(menage::submatrix_A(n, r)),
                                  menage::rook_polynomial(menage::submatrix_B(n, r))));
    }
  }
}

TEST_CASE("fixed_seat_count") {
  CHECK(menage::fixed_seat_count(3, 3) == 1);
  for (int r = 3; r <= 6; ++r) CHECK(menage::fixed_seat_count(6, r) == 20);
  CHECK(menage::fixed_seat_count(10, 3) == 54888);
  CHECK_THROWS_AS(menage::fixed_seat_count(2, 3), std::invalid_argument);

  for (int n = 3; n <= 10; ++n) {
    Int sum = 0;
    for (int r = 3; r <= n; ++r) {
      CHECK(menage::fixed_seat_count(n, r) == menage::fixed_seat_count(n, n - r + 3));
      sum += menage::fixed_seat_count(n, r);
    }
    CHECK(sum == menage::touchard_u(n));
  }
}

TEST_CASE("fixed_seat_count equals the minor permanent") {
  for (int n = 3; n <= 10; ++n) {
    const BinaryMatrix m = menage::menage_matrix(n);
    for (int r = 3; r <= n; ++r) {
      CHECK(menage::fixed_seat_count(n, r) == menage::permanent_ryser(minor(m, 1, r)));
    }
  }
}

TEST_CASE("straight_table_count") {
  CHECK(menage::straight_table_count(3, 3) == 1);
  CHECK(menage::straight_table_count(4, 3) == 2);
  CHECK(menage::permanent_brute(menage::complement_in_J(menage::submatrix_B(3, 3))) == 1);
  CHECK(menage::permanent_brute(menage::complement_in_J(menage::submatrix_B(4, 3))) == 2);
  for (int n = 3; n <= 10; ++n) {
    for (int r = 3; r <= n; ++r) {
      CHECK(menage::straight_table_count(n, r) ==
            menage::permanent_ryser(menage::complement_in_J(menage::submatrix_B(n, r))));
    }
  }
  CHECK_THROWS_AS(menage::straight_table_count(5, 6), std::invalid_argument);
}

TEST_CASE("single-sum form of the r=3 count") {
  CHECK(menage::fixed_seat_count_r3(3) == 1);
  CHECK(menage::fixed_seat_count_r3(6) == 20);
  CHECK(menage::fixed_seat_count_r3(10) == 54888);
  CHECK_THROWS_AS(menage::fixed_seat_count_r3(2), std::invalid_argument);
  for (int n = 3; n <= 12; ++n) {
    CHECK(menage::fixed_seat_count_r3(n) == menage::fixed_seat_count(n, 3));
  }
}
