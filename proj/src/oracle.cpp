#include "halve2/oracle.hpp"

#include <algorithm>
#include <map>

#include "halve2/error.hpp"

namespace halve2 {

namespace {

void require_small_prime_field(const Curve& c, unsigned long bound) {
  const FieldSpec& k = c.spec();
  if (!k.is_prime_field())
    throw Error(ErrorKind::FieldNotFinite, "point enumeration needs a prime field, got " + k.to_string());
  if (k.modulus() > bound)
    throw Error(ErrorKind::BoundExceeded,
                "p = " + k.modulus().get_str() + " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::size_t PointTable::index_of(const Point& p) const {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end())
    throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not in the point table");
  return static_cast<std::size_t>(it - points.begin());
}

PointTable enumerate_points(const Curve& c, unsigned long bound) {
  require_small_prime_field(c, bound);
  const FieldSpec& k = c.spec();
  const unsigned long p = k.modulus().get_ui();

  PointTable table{c, {Point::infinity()}, {}};
  for (unsigned long xv = 0; xv < p; ++xv) {
    FieldElement x(k, static_cast<long>(xv));
    FieldElement f = c.cubic(x);
    if (f.is_zero()) {
      table.points.push_back(Point::affine(x, f));
    } else if (auto r = sqrt_canonical(f)) {
      table.points.push_back(Point::affine(x, *r));
      table.points.push_back(Point::affine(x, -*r));
    }
  }
  return table;
}

PointTable build_preimage_table(const Curve& c, unsigned long bound) {
  PointTable table = enumerate_points(c, bound);
  // x-major with y ordered canonical-then-negated is not sorted by y, so
  // index through a map rather than binary search.
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < table.points.size(); ++i) index.emplace(table.points[i], i);
  table.preimages.assign(table.points.size(), {});
  for (const auto& q : table.points) table.preimages[index.at(double_point(c, q))].push_back(q);
  return table;
}

std::vector<Point> halves_bruteforce(const Curve& c, const Point& p, unsigned long bound) {
  PointTable table = enumerate_points(c, bound);
  std::vector<Point> out;
  for (const auto& q : table.points)
    if (double_point(c, q) == p) out.push_back(q);
  return out;
}

std::size_t group_order(const Curve& c, unsigned long bound) {
  return enumerate_points(c, bound).points.size();
}

}  // namespace halve2
