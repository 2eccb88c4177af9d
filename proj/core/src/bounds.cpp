#include "splitcyc/bounds.hpp"

#include <string>

#include "splitcyc/error.hpp"

namespace splitcyc {

int no_interior_bound(int g_side) {
  if (g_side < 0) throw Error(ErrorCode::InvalidParameter, "side genus must be >= 0, got " + std::to_string(g_side));
  long long k = 3;
  while (2 * k - 3 + 6LL * g_side > k * (k - 1) / 2) ++k;
  return static_cast<int>(k);
}

}  // namespace splitcyc
