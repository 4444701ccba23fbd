#include "halve2/halving.hpp"

#include <utility>

#include "halve2/error.hpp"

namespace halve2 {

namespace {

void require_affine_on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity())
    throw Error(ErrorKind::InfinityInput, "use halves_of_infinity for the point at infinity");
  if (!on_curve(c, p)) throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not on " + c.to_string());
}

struct Symmetric {
  FieldElement s1, s2, s3;
};

Symmetric symmetric(const RootTriple& t) {
  const auto& [r1, r2, r3] = t.r;
  return {r1 + r2 + r3, r1 * r2 + r2 * r3 + r3 * r1, r1 * r2 * r3};
}

template <std::size_t N, class F>
auto generate(F&& f) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array{f(I)...};
  }(std::make_index_sequence<N>{});
}

using Cubic = std::array<FieldElement, 4>;  // coefficients, constant term first

Cubic expand_monic(const FieldElement& u, const FieldElement& v, const FieldElement& w) {
  const auto& k = u.spec();
  return {-(u * v * w), u * v + v * w + w * u, -(u + v + w), FieldElement::one(k)};
}

}  // namespace

Divisibility is_halvable(const Curve& c, const Point& p) {
  require_affine_on_curve(c, p);
  auto witness = generate<3>([&](std::size_t i) {
    FieldElement diff = p.x() - c.root(i);
    auto root = sqrt_canonical(diff);
    bool sq = root.has_value();
    return SquareWitness{static_cast<int>(i + 1), std::move(diff), sq, std::move(root)};
  });
  bool all = witness[0].is_square && witness[1].is_square && witness[2].is_square;
  return Divisibility{all, std::move(witness)};
}

std::array<RootTriple, 4> root_triples(const Curve& c, const Point& p) {
  const Divisibility d = is_halvable(c, p);
  if (!d.halvable) throw Error(ErrorKind::NotHalvable, p.to_string() + " is not divisible by 2");

  std::array<FieldElement, 3> canon{*d.witness[0].root, *d.witness[1].root, *d.witness[2].root};
  constexpr std::array<std::array<bool, 2>, 4> kSigns = {{{false, false}, {false, true},
                                                          {true, false}, {true, true}}};
  std::array<RootTriple, 4> out = generate<4>([&](std::size_t s) {
    if (!p.y().is_zero()) {
      FieldElement r1 = kSigns[s][0] ? -canon[0] : canon[0];
      FieldElement r2 = kSigns[s][1] ? -canon[1] : canon[1];
      FieldElement r3 = -p.y() / (r1 * r2);
      return RootTriple{{std::move(r1), std::move(r2), std::move(r3)}};
    }
    // P = (a_j, 0): the canonical root at j is already zero.
    std::array<FieldElement, 3> r = canon;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (r[i].is_zero()) continue;
      if (kSigns[s][n++]) r[i] = -r[i];
    }
    return RootTriple{std::move(r)};
  });

  for (const auto& t : out)
    if (!is_valid_triple(c, p, t))
      throw Error(ErrorKind::InvariantBreach, "constructed root triple violates its invariants");
  return out;
}

bool is_valid_triple(const Curve& c, const Point& p, const RootTriple& t) {
  if (p.is_infinity()) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(t.r[i].spec() == c.spec())) return false;
    if (!(t.r[i].square() == p.x() - c.root(i))) return false;
  }
  if (!(t.r[0] * t.r[1] * t.r[2] == -p.y())) return false;
  return !(t.r[0] == t.r[1] || t.r[1] == t.r[2] || t.r[0] == t.r[2]);
}

HalfWithTangent halve_from_roots(const Curve& c, const Point& p, const RootTriple& t) {
  require_affine_on_curve(c, p);
  if (!is_valid_triple(c, p, t))
    throw Error(ErrorKind::InvalidTriple, "triple does not consist of admissible roots for " + p.to_string());
  const auto [s1, s2, s3] = symmetric(t);
  const FieldElement& x2 = p.x();
  const FieldElement& y2 = p.y();
  return {Point::affine(x2 + s2, -y2 - s1 * s2), TangentLine{-s1, -y2 + s1 * x2}};
}

HalvingReport halves(const Curve& c, const Point& p) {
  Divisibility d = is_halvable(c, p);
  HalvingReport report{d.halvable, std::move(d.witness), {}};
  if (!report.halvable) return report;

  for (auto& t : root_triples(c, p)) {
    auto [q, line] = halve_from_roots(c, p, t);
    if (!on_curve(c, q) || !(double_point(c, q) == p))
      throw Error(ErrorKind::InvariantBreach, "half " + q.to_string() + " does not double to " + p.to_string());
    report.halves.push_back(Half{std::move(t), std::move(q), std::move(line)});
  }
  return report;
}

std::array<Point, 4> halves_of_infinity(const Curve& c) { return two_torsion(c); }

bool verify_cubic_identity(const Curve& c, const TangentLine& line, const FieldElement& x1,
                           const FieldElement& x2) {
  const auto& [a1, a2, a3] = c.roots();
  Cubic lhs = expand_monic(a1, a2, a3);
  // (l x + m)^2 = l^2 x^2 + 2 l m x + m^2
  lhs[2] -= line.l.square();
  lhs[1] -= FieldElement(c.spec(), 2L) * line.l * line.m;
  lhs[0] -= line.m.square();
  return lhs == expand_monic(x1, x1, x2);
}

bool moebius_check(const Curve& c, const Point& /*p*/, const RootTriple& t,
                   const TangentLine& line, const FieldElement& x1) {
  for (std::size_t i = 0; i < 3; ++i)
    if (x1 == c.root(i))
      throw Error(ErrorKind::DegenerateDenominator,
                  "x1 = " + x1.to_string() + " coincides with root a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < 3; ++i) {
    const FieldElement& a = c.root(i);
    if (!((line.l * a + line.m) / (x1 - a) == t.r[i])) return false;
  }
  return true;
}

bool vieta_check(const Point& p, const RootTriple& t, const TangentLine& line,
                 const FieldElement& x1) {
  if (p.is_infinity()) return false;
  const FieldElement& x2 = p.x();
  const Cubic h{-(line.l * x2 + line.m), x1 - x2, line.l, FieldElement::one(x2.spec())};
  return h == expand_monic(t.r[0], t.r[1], t.r[2]);
}

}  // namespace halve2
