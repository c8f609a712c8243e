#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fsh {

// Exact arbitrary-precision integer. Every matrix entry in the library is
// one of these; overflow is not an acceptable failure mode anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

}  // namespace fsh
