#include "stci/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace stci {

Int binomial_coefficient(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: result is always an integer here
  }
  return result;
}

bool fits_u64(const Int& v) {
  return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t to_u64(const Int& v) {
  if (!fits_u64(v)) throw std::overflow_error("value does not fit in u64");
  return v.convert_to<std::uint64_t>();
}

}  // namespace stci
