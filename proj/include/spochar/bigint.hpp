#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spochar {

// Exact arbitrary-precision coefficients throughout; character coefficients
// grow quickly with degree and silent overflow would poison every identity
// check downstream.
using Int = boost::multiprecision::cpp_int;

Int binomial(long n, long k);
Int factorial(long n);

} // namespace spochar
