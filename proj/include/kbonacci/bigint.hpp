#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kbonacci {

// Sequence values grow exponentially (fixed 64-bit overflows near n = 90
// already for k = 2), so every integer in this library is arbitrary
// precision. Rationals are used only as intermediates for weighted
// partition sums, which are asserted integral before they leave a module.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Index = long long;

}  // namespace kbonacci
