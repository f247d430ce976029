#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vplin {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace vplin
