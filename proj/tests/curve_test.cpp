#include <random>

#include "doctest.h"
#include "halve2/curve.hpp"
#include "halve2/error.hpp"
#include "halve2/oracle.hpp"
#include "test_support.hpp"

using namespace halve2;
using namespace halve2::testing;

TEST_CASE("make_curve") {
  auto q = FieldSpec::rationals();
  auto c = make_curve(q, el(q, 0), el(q, 3), el(q, 4));
  CHECK(c.e1() == el(q, 7));
  CHECK(c.e2() == el(q, 12));
  CHECK(c.e3() == el(q, 0));
  CHECK_NOTHROW(curve(fp(7), 0, 3, 4));

  try {
    curve(q, 0, 0, 1);
    FAIL("repeated root accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RepeatedRoot);
  }
  // 0 and 7 coincide mod 7.
  CHECK_THROWS_AS(curve(fp(7), 0, 7, 1), Error);
  try {
    Curve(q, el(q, 0), el(fp(7), 3), el(q, 4));
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecMismatch);
  }
}

TEST_CASE("on_curve") {
  auto q = FieldSpec::rationals();
  auto c = curve(q, 0, 3, 4);
  CHECK(on_curve(c, pt(q, 6, -6)));
  CHECK(on_curve(c, pt(q, 4, 0)));
  CHECK_FALSE(on_curve(c, pt(q, 1, 1)));
  CHECK(on_curve(c, Point::infinity()));
  CHECK_THROWS_AS(on_curve(c, pt(fp(7), 6, 1)), Error);
}

TEST_CASE("group law examples") {
  auto q = FieldSpec::rationals();
  auto c = curve(q, 0, 3, 4);
  CHECK(double_point(c, pt(q, 6, -6)) == pt(q, 4, 0));
  CHECK(add(c, pt(q, 6, -6), Point::infinity()) == pt(q, 6, -6));
  CHECK(add(c, Point::infinity(), pt(q, 6, -6)) == pt(q, 6, -6));
  CHECK(add(c, pt(q, 4, 0), pt(q, 4, 0)).is_infinity());
  CHECK(add(c, pt(q, 6, -6), pt(q, 6, 6)).is_infinity());
  CHECK(neg(c, pt(q, 6, -6)) == pt(q, 6, 6));
  CHECK(neg(c, Point::infinity()).is_infinity());
  CHECK(scalar_mul(c, 4, pt(q, 6, -6)).is_infinity());
  CHECK(scalar_mul(c, 0, pt(q, 6, -6)).is_infinity());
  CHECK(scalar_mul(c, -1, pt(q, 6, -6)) == pt(q, 6, 6));
  CHECK(scalar_mul(c, 3, pt(q, 6, -6)) == pt(q, 6, 6));

  try {
    add(c, pt(q, 1, 1), pt(q, 4, 0));
    FAIL("off-curve point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOnCurve);
  }
  CHECK_THROWS_AS(double_point(c, pt(q, 1, 1)), Error);
}

TEST_CASE("rational doubling with fractional output") {
  auto q = FieldSpec::rationals();
  auto c = curve(q, -4, -2, 1);
  Point p = pt(q, -3, 2);
  REQUIRE(on_curve(c, p));
  Point twice = double_point(c, p);
  CHECK(twice == Point::affine(el(q, "17/16"), el(q, "-63/64")));
  // Torsion on a curve with full 2-torsion has order at most 8.
  Point acc = p;
  for (int n = 2; n <= 12; ++n) {
    acc = add(c, acc, p);
    CHECK_FALSE(acc.is_infinity());
  }
  CHECK(acc == scalar_mul(c, 12, p));
}

TEST_CASE("two_torsion") {
  for (auto k : {FieldSpec::rationals(), fp(7)}) {
    auto c = curve(k, 0, 3, 4);
    auto t = two_torsion(c);
    CHECK(t[0].is_infinity());
    CHECK(t[1] == pt(k, 0, 0));
    CHECK(t[2] == pt(k, 3, 0));
    CHECK(t[3] == pt(k, 4, 0));
    for (const auto& p : t) {
      CHECK(on_curve(c, p));
      CHECK(double_point(c, p).is_infinity());
    }
  }
}

TEST_CASE("double agrees with add(p, p) on every point of small curves") {
  for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
    auto k = fp(p);
    for (const auto& r : small_root_triples()) {
      if (r[0] > r[1] || r[1] > r[2]) continue;
      auto c = curve(k, r[0], r[1], r[2]);
      for (const auto& pt0 : enumerate_points(c).points) {
        REQUIRE(double_point(c, pt0) == add(c, pt0, pt0));
        REQUIRE(scalar_mul(c, 2, pt0) == double_point(c, pt0));
        REQUIRE(scalar_mul(c, -1, pt0) == neg(c, pt0));
        REQUIRE(on_curve(c, double_point(c, pt0)));
      }
    }
  }
}

TEST_CASE("sampled group axioms over F_p, p <= 101") {
  std::mt19937_64 rng(7);
  for (unsigned long p : {11ul, 37ul, 61ul, 101ul}) {
    auto k = fp(p);
    auto c = curve(k, 0, 1, static_cast<long>(p) - 1);
    auto pts = enumerate_points(c).points;
    const auto n = mpz_class(static_cast<unsigned long>(pts.size()));
    auto pick = [&] { return pts[rng() % pts.size()]; };
    for (int i = 0; i < 300; ++i) {
      Point a = pick(), b = pick(), d = pick();
      CHECK(add(c, add(c, a, b), d) == add(c, a, add(c, b, d)));
      CHECK(add(c, a, b) == add(c, b, a));
      CHECK(add(c, a, Point::infinity()) == a);
      CHECK(add(c, a, neg(c, a)).is_infinity());
      CHECK(scalar_mul(c, n, a).is_infinity());
      CHECK(scalar_mul(c, 5, a) == add(c, scalar_mul(c, 3, a), scalar_mul(c, 2, a)));
    }
  }
}
