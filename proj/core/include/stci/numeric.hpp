#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace stci {

/// Arbitrary-precision signed integer used for exponents, coefficients and
/// all derived curve quantities.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Binomial coefficient C(n, k) by the multiplicative rule, exact at any size.
Int binomial_coefficient(const Int& n, const Int& k);

bool fits_u64(const Int& v);
std::uint64_t to_u64(const Int& v);

}  // namespace stci
