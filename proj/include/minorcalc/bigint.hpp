#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace minorcalc {

// Arbitrary-precision signed integer. Polynomial coefficients grow with the
// power m, so nothing in the polynomial kernel may use a fixed-width type.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace minorcalc
