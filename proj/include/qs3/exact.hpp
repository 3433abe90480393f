#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qs3 {

// Exact scalars for every path that must produce certificates rather than
// residuals: arbitrary-precision integers and canonical rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace qs3
