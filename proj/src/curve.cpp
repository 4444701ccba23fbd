#include "halve2/curve.hpp"

#include "halve2/error.hpp"

namespace halve2 {

namespace {

void require_spec(const FieldSpec& spec, const FieldElement& e) {
  if (!(e.spec() == spec))
    throw Error(ErrorKind::SpecMismatch,
                "element of " + e.spec().to_string() + " used with curve over " + spec.to_string());
}

void require_on_curve(const Curve& c, const Point& p) {
  if (!on_curve(c, p)) throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not on " + c.to_string());
}

// Chord or tangent through p and q with slope `lambda`, third point negated.
Point line_sum(const Point& p, const Point& q, const FieldElement& lambda, const Curve& c) {
  FieldElement x3 = lambda.square() + c.e1() - p.x() - q.x();
  FieldElement y3 = lambda * (p.x() - x3) - p.y();
  return Point::affine(std::move(x3), std::move(y3));
}

Point double_unchecked(const Curve& c, const Point& p) {
  if (p.is_infinity() || p.y().is_zero()) return Point::infinity();
  const FieldSpec& k = c.spec();
  const FieldElement& x = p.x();
  // d/dx (x^3 - e1 x^2 + e2 x - e3) / (2y)
  FieldElement slope_num = FieldElement(k, 3L) * x.square() - FieldElement(k, 2L) * c.e1() * x + c.e2();
  FieldElement lambda = slope_num / (FieldElement(k, 2L) * p.y());
  return line_sum(p, p, lambda, c);
}

Point add_unchecked(const Curve& c, const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return double_unchecked(c, p);
    return Point::infinity();
  }
  FieldElement lambda = (q.y() - p.y()) / (q.x() - p.x());
  return line_sum(p, q, lambda, c);
}

}  // namespace

Curve::Curve(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
             const FieldElement& a3)
    : spec_(spec), roots_{a1, a2, a3} {
  for (const auto& r : roots_) require_spec(spec_, r);
  if (a1 == a2 || a1 == a3 || a2 == a3)
    throw Error(ErrorKind::RepeatedRoot, "roots " + a1.to_string() + ", " + a2.to_string() + ", " +
                                             a3.to_string() + " are not pairwise distinct");
}

Curve make_curve(const FieldSpec& spec, const FieldElement& a1, const FieldElement& a2,
                 const FieldElement& a3) {
  return Curve(spec, a1, a2, a3);
}

FieldElement Curve::e1() const { return roots_[0] + roots_[1] + roots_[2]; }

FieldElement Curve::e2() const {
  return roots_[0] * roots_[1] + roots_[1] * roots_[2] + roots_[2] * roots_[0];
}

FieldElement Curve::e3() const { return roots_[0] * roots_[1] * roots_[2]; }

FieldElement Curve::cubic(const FieldElement& x) const {
  return (x - roots_[0]) * (x - roots_[1]) * (x - roots_[2]);
}

std::string Curve::to_string() const {
  return "y^2 = (x - " + roots_[0].to_string() + ")(x - " + roots_[1].to_string() + ")(x - " +
         roots_[2].to_string() + ") over " + spec_.to_string();
}

Point Point::affine(FieldElement x, FieldElement y) {
  if (!(x.spec() == y.spec()))
    throw Error(ErrorKind::SpecMismatch, "point coordinates from different fields");
  Point p;
  p.coords_ = Coords{std::move(x), std::move(y)};
  return p;
}

const FieldElement& Point::x() const {
  if (!coords_) throw Error(ErrorKind::InfinityInput, "the point at infinity has no coordinates");
  return coords_->x;
}

const FieldElement& Point::y() const {
  if (!coords_) throw Error(ErrorKind::InfinityInput, "the point at infinity has no coordinates");
  return coords_->y;
}

std::string Point::to_string() const {
  if (!coords_) return "inf";
  return "(" + coords_->x.to_string() + ", " + coords_->y.to_string() + ")";
}

bool operator<(const Point& a, const Point& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (a.x() == b.x()) return a.y() < b.y();
  return a.x() < b.x();
}

bool on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity()) return true;
  require_spec(c.spec(), p.x());
  return p.y().square() == c.cubic(p.x());
}

Point neg(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  if (p.is_infinity()) return p;
  return Point::affine(p.x(), -p.y());
}

Point add(const Curve& c, const Point& p, const Point& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return add_unchecked(c, p, q);
}

Point double_point(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  return double_unchecked(c, p);
}

Point scalar_mul(const Curve& c, const mpz_class& n, const Point& p) {
  require_on_curve(c, p);
  if (sgn(n) == 0 || p.is_infinity()) return Point::infinity();
  const Point base = sgn(n) < 0 ? Point::affine(p.x(), -p.y()) : p;
  mpz_class k = abs(n);
  Point acc = Point::infinity();
  for (auto bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = double_unchecked(c, acc);
    if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = add_unchecked(c, acc, base);
  }
  return acc;
}

std::array<Point, 4> two_torsion(const Curve& c) {
  const auto zero = FieldElement::zero(c.spec());
  return {Point::infinity(), Point::affine(c.root(0), zero), Point::affine(c.root(1), zero),
          Point::affine(c.root(2), zero)};
}

}  // namespace halve2
