#pragma once

#include <vector>

#include "halve2/curve.hpp"
#include "halve2/error.hpp"
#include "halve2/halving.hpp"

namespace halve2 {

/// base <- links[0] <- links[1] <- ..., each link doubling to its predecessor.
struct HalvingChain {
  Point base;
  std::vector<Point> links;

  std::size_t depth() const noexcept { return links.size(); }

  friend bool operator==(const HalvingChain&, const HalvingChain&) = default;
};

/// Longest halving chain above `p` of length at most `max_k`.
///
/// Depth-first over the four halves at every level, in `halves` order; the
/// first chain reaching the greatest depth wins. Throws InfinityInput,
/// NotOnCurve, and InvalidArgument for max_k < 1.
HalvingChain two_adic_depth(const Curve& c, const Point& p, int max_k);

struct Order4Point {
  Point q;
  bool doubles_to_base;    // 2Q == (a_j, 0)
  bool has_order_four;     // 4Q == inf and 2Q != inf
};

/// Raised by order4_points when a_j - a_a or a_j - a_b is not a square.
class RootsNotSquareError : public Error {
 public:
  RootsNotSquareError(const std::string& what, std::vector<SquareWitness> witness)
      : Error(ErrorKind::RootsNotSquare, what), witness_(std::move(witness)) {}

  const std::vector<SquareWitness>& witness() const noexcept { return witness_; }

 private:
  std::vector<SquareWitness> witness_;
};

/// The four points of order 4 lying over the 2-torsion point (a_j, 0), with
/// j in {1, 2, 3}. With r_a, r_b the canonical roots of a_j - a_a and a_j - a_b
/// (a < b the other indices):
///
///   (a_j + r_a r_b, -r_a (a_j - a_b) - r_b (a_j - a_a))   and its negative,
///   (a_j - r_a r_b, -r_a (a_j - a_b) + r_b (a_j - a_a))   and its negative.
///
/// Each point comes with its doubling and order confirmation.
std::vector<Order4Point> order4_points(const Curve& c, int j);

}  // namespace halve2
