#include "halve2/tower.hpp"

namespace halve2 {

namespace {

std::vector<Point> longest_chain(const Curve& c, const Point& p, int remaining) {
  if (remaining == 0) return {};
  HalvingReport report = halves(c, p);
  std::vector<Point> best;
  for (auto& h : report.halves) {
    std::vector<Point> chain{h.q};
    auto rest = longest_chain(c, h.q, remaining - 1);
    chain.insert(chain.end(), rest.begin(), rest.end());
    if (chain.size() > best.size()) best = std::move(chain);
    if (best.size() == static_cast<std::size_t>(remaining)) break;
  }
  return best;
}

}  // namespace

HalvingChain two_adic_depth(const Curve& c, const Point& p, int max_k) {
  if (max_k < 1) throw Error(ErrorKind::InvalidArgument, "max depth must be at least 1");
  if (p.is_infinity()) throw Error(ErrorKind::InfinityInput, "no halving chain above infinity");
  if (!on_curve(c, p)) throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not on " + c.to_string());
  return HalvingChain{p, longest_chain(c, p, max_k)};
}

std::vector<Order4Point> order4_points(const Curve& c, int j) {
  if (j < 1 || j > 3) throw Error(ErrorKind::InvalidArgument, "root index must be 1, 2 or 3");
  const auto jj = static_cast<std::size_t>(j - 1);
  const std::size_t a = jj == 0 ? 1 : 0;
  const std::size_t b = jj == 2 ? 1 : 2;
  const FieldElement& aj = c.root(jj);

  const FieldElement da = aj - c.root(a);
  const FieldElement db = aj - c.root(b);
  auto ra = sqrt_canonical(da);
  auto rb = sqrt_canonical(db);
  if (!ra || !rb) {
    std::vector<SquareWitness> witness{
        {static_cast<int>(a + 1), da, ra.has_value(), ra},
        {static_cast<int>(b + 1), db, rb.has_value(), rb},
    };
    throw RootsNotSquareError("a" + std::to_string(j) + " - a_i is not a square for every other root",
                              std::move(witness));
  }

  const FieldElement rr = *ra * *rb;
  const FieldElement u = *ra * db;
  const FieldElement v = *rb * da;
  const std::array<Point, 4> candidates{
      Point::affine(aj + rr, -u - v),
      Point::affine(aj + rr, u + v),
      Point::affine(aj - rr, -u + v),
      Point::affine(aj - rr, u - v),
  };

  const Point base = Point::affine(aj, FieldElement::zero(c.spec()));
  std::vector<Order4Point> out;
  for (const auto& q : candidates) {
    const Point twice = double_point(c, q);
    const bool order4 = !twice.is_infinity() && double_point(c, twice).is_infinity();
    out.push_back(Order4Point{q, twice == base, order4});
  }
  return out;
}

}  // namespace halve2
