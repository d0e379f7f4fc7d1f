#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace repfact {

// Factorization counts grow exponentially with word length, so counting is
// done in exact arbitrary precision. Uniqueness decisions must never hinge
// on an overflowed counter.
using BigInt = boost::multiprecision::cpp_int;

} // namespace repfact
