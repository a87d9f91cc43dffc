#pragma once

#include "pdtrank/designated.hpp"

namespace pdtrank {

/// Splits a partition with overline designated summands into (alpha, beta; k).
///
/// Per occurring size i with f copies and designated position g:
///   i == k or g >= 2  ->  alpha gets g copies, beta gets f - g;
///   i != k and g == 1 ->  beta gets all f copies.
/// Weight is preserved and the tag carries over unchanged.
S2Triple delta(const OverlinePartition& lambda);

/// Inverse of delta. Per size i with x copies in alpha and y in beta:
///   i == t or x >= 2  ->  f = x + y, g = x;
///   x == 0, y >= 1    ->  f = y, g = 1.
OverlinePartition delta_inverse(const S2Triple& triple);

}  // namespace pdtrank
