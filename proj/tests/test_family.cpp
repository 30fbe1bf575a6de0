// Copyright 2026 The ckpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>

#include "ckpoints/family.hpp"
#include "ckpoints/search.hpp"
#include "doctest.h"

using namespace ckp;

namespace {

CPoint pt(long x, long y, long z = 1) { return {Integer(x), Integer(y), Integer(z)}; }
Rational q(long n, long d = 1) { return {Integer(n), Integer(d)}; }

}  // namespace

TEST_CASE("projective normalization") {
  CHECK(pt(2, 0, 2) == pt(1, 0, 1));
  CHECK(pt(-3, 6, -3) == pt(1, -2, 1));
  CHECK(pt(-5, 0, 0) == pt(1, 0, 0));
  CHECK(pt(0, -2, 0) == pt(0, 1, 0));
  CHECK(CPoint::affine(q(1, 2), q(-9, 4)) == pt(2, -9, 4));
  CHECK(CPoint::affine(q(1, 2), q(-9, 4)).str() == "(1/2 : -9/4 : 1)");
  CHECK(pt(-6, 3).str() == "(-6 : 3 : 1)");
  CHECK_THROWS_AS(pt(0, 0, 0), DomainError);
  std::vector<CPoint> v{pt(1, 1), pt(0, 1, 0), pt(-1, 2), pt(1, 0, 0)};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<CPoint>{pt(1, 0, 0), pt(0, 1, 0), pt(-1, 2), pt(1, 1)});
}

TEST_CASE("family models") {
  const auto f = make_family(Rational(7));
  CHECK(f.e1.a1 == Rational(3));
  CHECK(f.e1.a6 == Rational(7));
  CHECK(f.e2.a2 == Rational(28));
  CHECK(f.e2.a6 == Rational(784));
  CHECK(f.e3.a2 == Rational(-27));
  CHECK(f.e3.a6 == Rational(-12096));
  CHECK_THROWS_AS(make_family(Rational(0)), DomainError);
  CHECK_THROWS_AS(make_family(q(-27, 16)), DomainError);
  CHECK_NOTHROW(make_family(q(-27, 17)));
}

TEST_CASE("quotient maps") {
  const QuarticCurve c1(Rational(1));
  CHECK(phi(1, c1, pt(1, 0)) == EPoint::affine(-1, 0));
  CHECK(phi(3, QuarticCurve(Rational(135)), pt(3, 3)).is_identity());
  CHECK(phi(2, QuarticCurve(Rational(-1)), pt(-1, 0)) == EPoint::affine(4, -4));
  for (int i = 1; i <= 3; ++i) {
    CHECK(phi(i, c1, pt(1, 0, 0)).is_identity());
    CHECK(phi(i, c1, pt(0, 1, 0)).is_identity());
  }
  CHECK_THROWS_AS(phi(1, c1, pt(1, 1)), DomainError);
}

TEST_CASE("preimages") {
  const QuarticCurve c135(Rational(135));
  CHECK(preimages(3, c135, EPoint::affine(72, 0)) == std::vector<CPoint>{pt(-6, 3), pt(3, -6)});
  const QuarticCurve cm1(Rational(-1));
  CHECK(preimages(3, cm1, EPoint::identity()) ==
        std::vector<CPoint>{pt(1, 0, 0), pt(0, 1, 0), pt(-1, -1)});
  CHECK(preimages(1, QuarticCurve(Rational(1)), EPoint::affine(-1, 0)) ==
        std::vector<CPoint>{pt(0, 1), pt(1, 0)});
  CHECK(preimages(2, cm1, EPoint::identity()) == std::vector<CPoint>{pt(1, 0, 0), pt(0, 1, 0)});
  CHECK_THROWS_AS(preimages(1, cm1, EPoint::affine(1, 1)), DomainError);
}

TEST_CASE("generic point on E_2") {
  CHECK(e2_generic_point(Rational(-1)).order == 5u);
  CHECK(e2_generic_point(Rational(-2)).order == 6u);
  CHECK(!e2_generic_point(Rational(3)).order.has_value());
  CHECK(e2_generic_point(Rational(3)).point == EPoint::affine(0, 12));
}

TEST_CASE("search on C_k") {
  const auto affine = [](const std::vector<CPoint>& v) {
    std::vector<CPoint> out;
    for (const auto& p : v) {
      if (!p.at_infinity()) out.push_back(p);
    }
    return out;
  };
  auto k1 = affine(search_ck(Rational(1), 5));
  std::vector<CPoint> want{pt(-3, -2), pt(1, 0), pt(0, 1), pt(1, -1), pt(-1, 1), pt(-2, -3)};
  std::sort(want.begin(), want.end());
  CHECK(k1 == want);
  CHECK(affine(search_ck(Rational(-5), 5)) == std::vector<CPoint>{pt(-2, -1), pt(-1, -2)});
  const auto k10 = search_ck(Rational(-10), 10);
  CHECK(std::find(k10.begin(), k10.end(), CPoint::affine(q(1, 2), q(-9, 4))) != k10.end());
  CHECK_THROWS_AS(search_ck(Rational(0), 5), DomainError);
  CHECK_THROWS_AS(search_ck(Rational(1), 0), DomainError);
}

TEST_CASE("search kernels agree") {
  for (long k : {-10, -8, -5, -3, -1, 1, 3, 6, 8, 135, -56000}) {
    const auto fast = search_ck(Rational(k), 12);
    CHECK(fast == search_ck_serial(Rational(k), 12));
    const auto smaller = search_ck(Rational(k), 6);
    CHECK(std::includes(fast.begin(), fast.end(), smaller.begin(), smaller.end()));
    for (const auto& p : fast) {
      CHECK(QuarticCurve(Rational(k)).contains(p));
      CHECK(std::find(fast.begin(), fast.end(), p.swapped()) != fast.end());
    }
  }
  CHECK(search_ck(q(6, 5), 8) == search_ck_serial(q(6, 5), 8));
  for (long k : {-7, 1, 135}) {
    for (int i = 1; i <= 3; ++i) {
      const auto e = e_curve(i, Rational(k));
      CHECK(search_e(e, 15) == search_e_serial(e, 15));
    }
  }
}

TEST_CASE("integral cubic roots against brute force") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c2d(0, 60), wd(-200, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const long c2 = c2d(rng);
    // Plant a root so the check exercises the bisection.
    const long w0 = wd(rng);
    const long c0 = -(w0 * w0 * w0 + c2 * w0 * w0);
    std::vector<Integer> expected;
    for (long w = -5000; w <= 5000; ++w) {
      if (w * w * w + c2 * w * w + c0 == 0) expected.emplace_back(w);
    }
    CHECK(integer_roots_depressed_cubic(Integer(c2), Integer(c0)) == expected);
  }
}

TEST_CASE("search on elliptic curves") {
  const auto e21 = search_e(e2_curve(Rational(1)), 1);
  CHECK(std::find(e21.begin(), e21.end(), EPoint::affine(0, 4)) != e21.end());
  const auto e3 = search_e(e3_curve(Rational(135)), 100);
  CHECK(std::find(e3.begin(), e3.end(), EPoint::affine(72, 0)) != e3.end());
  CHECK(search_e(e1_curve(Rational(-2)), 20).empty());
  for (const auto& p : e3) CHECK(e3_curve(Rational(135)).contains(p));
}

TEST_CASE("round trip through the quotient maps") {
  const std::vector<long> ks{-10, -8, -5, -3, -1, 1, 3, 6, 8, 135, 2, -2, -9, 7, 4, 9, -6, 10, -4, 5};
  CHECK(ks.size() == 20);
  for (long k : ks) {
    const QuarticCurve c{Rational(k)};
    for (const auto& p : search_ck(Rational(k), 10)) {
      for (int i = 1; i <= 3; ++i) {
        const EPoint image = phi(i, c, p);
        CHECK(e_curve(i, Rational(k)).contains(image));
        const auto fiber = preimages(i, c, image);
        CHECK(std::find(fiber.begin(), fiber.end(), p) != fiber.end());
        if (i == 1 && !image.is_identity()) CHECK(fiber.size() <= 2);
      }
    }
  }
}
