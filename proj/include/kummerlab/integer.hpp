#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kummerlab {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Binomial coefficient C(n, k) for arbitrary-precision (possibly negative)
 * n and small k >= 0. Returns 0 for k < 0. */
Integer binomial(const Integer& n, long k);

} // namespace kummerlab
