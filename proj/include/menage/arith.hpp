#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace menage {

// Every count in this library is exact; values exceed 64 bits quickly
// (m_total(20) already has 25 digits).
using Int = boost::multiprecision::cpp_int;

// n! for n >= 0. Cached per process; the cache only grows and is
// mutex-guarded, so concurrent first calls are safe.
Int factorial(long long n);

// Binomial coefficient C(a, b) with the convention C(a, b) = 0 for b < 0 or
// b > a. Requires a >= 0: a negative upper argument indicates a bug in a
// caller-side formula, not a user input error.
Int binomial(long long a, long long b);

// Decimal rendering shared by every output path.
std::string to_decimal(const Int& value);

}  // namespace menage
