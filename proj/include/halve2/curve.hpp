#pragma once

#include <array>
#include <optional>
#include <string>

#include "halve2/field.hpp"

namespace halve2 {

/// y^2 = (x - a1)(x - a2)(x - a3) with pairwise distinct roots in one field.
class Curve {
 public:
  /// Throws RepeatedRoot if two roots coincide, SpecMismatch if a root is
  /// not an element of `spec`.
  Curve(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
        const FieldElement& a3);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::array<FieldElement, 3>& roots() const noexcept { return roots_; }
  /// Zero-based.
  const FieldElement& root(std::size_t i) const { return roots_.at(i); }

  // Expanded cubic x^3 - e1 x^2 + e2 x - e3.
  FieldElement e1() const;
  FieldElement e2() const;
  FieldElement e3() const;

  /// (x - a1)(x - a2)(x - a3)
  FieldElement cubic(const FieldElement& x) const;

  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::array<FieldElement, 3> roots_;
};

Curve make_curve(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
                 const FieldElement& a3);

/// Affine point or the point at infinity.
class Point {
 public:
  static Point infinity() { return Point(); }
  static Point affine(FieldElement x, FieldElement y);

  bool is_infinity() const noexcept { return !coords_.has_value(); }
  /// Throws InfinityInput on the point at infinity.
  const FieldElement& x() const;
  const FieldElement& y() const;

  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  /// Representation order for ordered containers; infinity sorts first.
  friend bool operator<(const Point& a, const Point& b);

 private:
  Point() = default;

  struct Coords {
    FieldElement x;
    FieldElement y;
    friend bool operator==(const Coords&, const Coords&) = default;
  };
  std::optional<Coords> coords_;
};

bool on_curve(const Curve& c, const Point& p);

// Group law. Every entry point throws NotOnCurve for points off `c` and
// SpecMismatch for coordinates from another field.
Point neg(const Curve& c, const Point& p);
Point add(const Curve& c, const Point& p, const Point& q);
Point double_point(const Curve& c, const Point& p);
/// Double-and-add; n may be zero or negative.
Point scalar_mul(const Curve& c, const mpz_class& n, const Point& p);

/// [inf, (a1, 0), (a2, 0), (a3, 0)]
std::array<Point, 4> two_torsion(const Curve& c);

}  // namespace halve2
