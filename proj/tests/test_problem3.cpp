#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "menage/problem3.hpp"

using menage::analyze;
using menage::Int;
using menage::Problem3Report;
using menage::scan;

TEST_CASE("analyze n=3") {
  const Problem3Report report = analyze(3);
  CHECK(report.counts.size() == 1);
  CHECK(report.counts.at(3) == 1);
  CHECK(report.is_constant);
  REQUIRE(report.common_value.has_value());
  CHECK(*report.common_value == 1);
  CHECK(report.divides);
  CHECK(*report.quotient == 1);
}

TEST_CASE("analyze n=6: constant at 20") {
  const Problem3Report report = analyze(6);
  CHECK(report.is_constant);
  CHECK(*report.common_value == 20);
  CHECK(report.divides);
  CHECK(*report.quotient == 20);
  for (int r = 3; r <= 6; ++r) CHECK(report.counts.at(r) == 20);
}

TEST_CASE("analyze n=10: divisibility without constancy") {
  const Problem3Report report = analyze(10);
  CHECK_FALSE(report.is_constant);
  CHECK_FALSE(report.common_value.has_value());
  CHECK(report.divides);
  REQUIRE(report.quotient.has_value());
  CHECK(*report.quotient == 54974);
  CHECK(report.counts.at(3) == 54888);
}

TEST_CASE("analyze n=5: divisibility fails") {
  const Problem3Report report = analyze(5);
  CHECK_FALSE(report.divides);
  CHECK_FALSE(report.quotient.has_value());
  CHECK_FALSE(report.is_constant);
}

TEST_CASE("analyze rejects n < 3") {
  CHECK_THROWS_AS(analyze(2), std::invalid_argument);
}

TEST_CASE("report invariants across the scan range") {
  for (const Problem3Report& report : scan(3, 12)) {
    Int sum = 0;
    for (const auto& [r, value] : report.counts) {
      CHECK(value == report.counts.at(report.n - r + 3));
      sum += value;
    }
    CHECK(sum == menage::touchard_u(report.n));
    CHECK(static_cast<int>(report.counts.size()) == report.n - 2);
    if (!report.divides) CHECK_FALSE(report.is_constant);
    if (report.is_constant) {
      CHECK(report.divides);
      CHECK(*report.common_value == *report.quotient);
    }
    // mirrored half agrees with a full direct recompute
    for (int r = 3; r <= report.n; ++r) {
      CHECK(report.counts.at(r) == menage::fixed_seat_count(report.n, r));
    }
  }
}

TEST_CASE("scan finds the constant set {3, 4, 6} up to 12") {
  const auto reports = scan(3, 12);
  REQUIRE(reports.size() == 10);
  std::vector<int> constant;
  for (const auto& report : reports) {
    if (report.is_constant) constant.push_back(report.n);
  }
  CHECK(constant == std::vector<int>{3, 4, 6});
  CHECK(*reports[0].common_value == 1);   // n=3
  CHECK(*reports[1].common_value == 1);   // n=4
  CHECK(*reports[3].common_value == 20);  // n=6
}

TEST_CASE("scan(10, 10) reproduces the refutation record") {
  const auto reports = scan(10, 10);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].divides);
  CHECK_FALSE(reports[0].is_constant);
}

TEST_CASE("scan range validation") {
  CHECK_THROWS_AS(scan(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(scan(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(scan(3, 19), std::invalid_argument);
  CHECK_NOTHROW(scan(3, 19, 20));
}

TEST_CASE("parallel scan matches the serial scan") {
  const auto serial = scan(3, 14);
  const auto parallel = scan(3, 14, menage::kDefaultScanGuard, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].counts == parallel[i].counts);
    CHECK(serial[i].is_constant == parallel[i].is_constant);
    CHECK(serial[i].divides == parallel[i].divides);
  }
}
