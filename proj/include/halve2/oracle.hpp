#pragma once

#include <cstddef>
#include <vector>

#include "halve2/curve.hpp"

namespace halve2 {

inline constexpr unsigned long kDefaultPrimeBound = 10007;

/// Every point of E(F_p), infinity first, then x-major with (x, r) before
/// (x, -r) for the canonical root r. `preimages[i]` lists the points doubling
/// to `points[i]` (filled only by build_preimage_table).
struct PointTable {
  Curve curve;
  std::vector<Point> points;
  std::vector<std::vector<Point>> preimages;

  /// Index of `p` in `points`; throws NotOnCurve if absent.
  std::size_t index_of(const Point& p) const;
};

// Brute-force ground truth over small prime fields. All of these throw
// FieldNotFinite over Q and BoundExceeded when p > bound.

PointTable enumerate_points(const Curve& c, unsigned long bound = kDefaultPrimeBound);

/// Points plus the full doubling-preimage table.
PointTable build_preimage_table(const Curve& c, unsigned long bound = kDefaultPrimeBound);

/// All Q with 2Q == p, by exhaustive scan, in enumeration order.
std::vector<Point> halves_bruteforce(const Curve& c, const Point& p,
                                     unsigned long bound = kDefaultPrimeBound);

std::size_t group_order(const Curve& c, unsigned long bound = kDefaultPrimeBound);

}  // namespace halve2
