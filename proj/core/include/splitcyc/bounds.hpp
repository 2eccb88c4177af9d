#pragma once

namespace splitcyc {

/// Smallest k with 2k - 3 + 6g <= k(k-1)/2: the shortest cycle that can bound
/// a side of genus g without interior vertices in a triangulation of a
/// complete graph. Throws InvalidParameter for g < 0.
int no_interior_bound(int g_side);

}  // namespace splitcyc
