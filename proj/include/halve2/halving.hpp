#pragma once

#include <array>
#include <optional>
#include <vector>

#include "halve2/curve.hpp"
#include "halve2/field.hpp"

namespace halve2 {

/// Outcome of testing whether x(P) - a_i is a square, for one root a_i.
struct SquareWitness {
  int index;  // 1-based root index
  FieldElement difference;
  bool is_square;
  std::optional<FieldElement> root;  // canonical root, present iff is_square

  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

struct Divisibility {
  bool halvable;
  std::array<SquareWitness, 3> witness;
};

/// Square roots r_i of x(P) - a_i with r1 r2 r3 = -y(P).
struct RootTriple {
  std::array<FieldElement, 3> r;

  friend bool operator==(const RootTriple&, const RootTriple&) = default;
};

/// The tangent y = l x + m to the curve at a half Q; it meets the curve again at -P.
struct TangentLine {
  FieldElement l;
  FieldElement m;

  friend bool operator==(const TangentLine&, const TangentLine&) = default;
};

struct Half {
  RootTriple triple;
  Point q;
  TangentLine tangent;

  friend bool operator==(const Half&, const Half&) = default;
};

struct HalvingReport {
  bool halvable;
  std::array<SquareWitness, 3> witness;
  std::vector<Half> halves;  // four entries when halvable, in root_triples order

  friend bool operator==(const HalvingReport&, const HalvingReport&) = default;
};

/// P is divisible by 2 in E(K) iff every x(P) - a_i is a square in K.
/// Throws InfinityInput for P = inf and NotOnCurve.
Divisibility is_halvable(const Curve& c, const Point& p);

/// The four admissible root triples, in a fixed order.
///
/// With y(P) != 0 the canonical roots of the first two differences take the
/// sign patterns (+,+), (+,-), (-,+), (-,-) and r3 = -y / (r1 r2). With
/// y(P) = 0, P = (a_j, 0): r_j = 0 and the same sign patterns go to the two
/// remaining canonical roots in index order.
///
/// Throws NotHalvable, InfinityInput, NotOnCurve.
std::array<RootTriple, 4> root_triples(const Curve& c, const Point& p);

/// Checks the RootTriple invariants against (c, p): r_i^2 = x - a_i,
/// r1 r2 r3 = -y, pairwise distinct.
bool is_valid_triple(const Curve& c, const Point& p, const RootTriple& t);

struct HalfWithTangent {
  Point q;
  TangentLine tangent;
};

/// Q = (x + s2, -y - s1 s2), l = -s1, m = -y + s1 x, where s1 and s2 are the
/// first and second elementary symmetric functions of the triple.
/// Throws InvalidTriple if `t` does not belong to (c, p).
HalfWithTangent halve_from_roots(const Curve& c, const Point& p, const RootTriple& t);

/// Decision plus all four halves. A non-halvable point is a normal result with
/// an empty `halves`. Throws InfinityInput, NotOnCurve; InvariantBreach if a
/// constructed half fails to double back to `p`.
HalvingReport halves(const Curve& c, const Point& p);

/// Preimages of inf under doubling, i.e. two_torsion(c).
std::array<Point, 4> halves_of_infinity(const Curve& c);

/// (x - a1)(x - a2)(x - a3) - (l x + m)^2 == (x - x1)^2 (x - x2), coefficient-wise.
bool verify_cubic_identity(const Curve& c, const TangentLine& line, const FieldElement& x1,
                           const FieldElement& x2);

/// The map z -> (l z + m) / (x1 - z) sends a_i to r_i for each i.
/// Throws DegenerateDenominator if x1 equals some a_i.
bool moebius_check(const Curve& c, const Point& p, const RootTriple& t, const TangentLine& line,
                   const FieldElement& x1);

/// t^3 + l t^2 + (x1 - x2) t - (l x2 + m) == (t - r1)(t - r2)(t - r3), coefficient-wise.
bool vieta_check(const Point& p, const RootTriple& t, const TangentLine& line,
                 const FieldElement& x1);

}  // namespace halve2
