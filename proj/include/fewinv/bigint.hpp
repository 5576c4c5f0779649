#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fewinv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// binom(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(long long n, long long k);

Int factorial(int n);

inline Int power_of_two(int n) { return Int(1) << n; }

} // namespace fewinv
