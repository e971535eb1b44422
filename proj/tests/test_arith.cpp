#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "menage/arith.hpp"

using menage::binomial;
using menage::factorial;
using menage::Int;

TEST_CASE("factorial small values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
}

TEST_CASE("factorial exceeds 64 bits without truncation") {
  CHECK(factorial(25) == Int("15511210043330985984000000"));
  CHECK_THROWS_AS(factorial(-1), std::logic_error);
}

TEST_CASE("binomial zero convention") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::logic_error);
}

TEST_CASE("binomial Pascal rule") {
  for (long long a = 1; a <= 40; ++a) {
    for (long long b = 0; b <= a; ++b) {
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
  }
}

TEST_CASE("decimal rendering") {
  CHECK(menage::to_decimal(Int(0)) == "0");
  CHECK(menage::to_decimal(Int(-42)) == "-42");
  CHECK(menage::to_decimal(factorial(30)) == "265252859812191058636308480000000");
}
