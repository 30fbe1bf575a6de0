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


#include <random>
#include <set>

#include "ckpoints/cases.hpp"
#include "ckpoints/diophantine.hpp"
#include "ckpoints/errors.hpp"
#include "ckpoints/search.hpp"
#include "doctest.h"

using namespace ckp;

namespace {

Rational q(long a, long b = 1) { return Rational{Integer(a), Integer(b)}; }

std::vector<Integer> zs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::set<Rational> all_k(const CaseReport& r) {
  std::set<Rational> out(r.rational_extras.begin(), r.rational_extras.end());
  for (const auto& k : r.integral_k) out.insert(Rational(k));
  return out;
}

}  // namespace

TEST_CASE("j-invariant families") {
  CHECK(jfamily_eval(2, q(48)) == 1728);
  CHECK_THROWS_AS(jfamily_eval(3, q(3)), DomainError);
  CHECK_THROWS_AS(jfamily_eval(8, q(1)), DomainError);
  // t = u/v = -2 from the order-5 solution (u, v) = (2, -1).
  CHECK(jfamily_eval(5, q(-2)) == e1_curve(q(864)).j_invariant());
  const Rational b = q(1, 3);

  // Tate normal form E(b, c): y^2 + (1 - c)xy - by = x^3 - bx^2 with (0, 0)
  // of order i for the classical (b, c); its j must lie in the image of f_i.
  const auto tate = [](const Rational& b, const Rational& c) {
    WeierstrassCurve e;
    e.a1 = Rational(1) - c;
    e.a3 = -b;
    e.a2 = -b;
    return e;
  };
  // y^2 + xy + a3 y = x^3 has (0, 0) of order 3.
  const auto order3 = [](const Rational& a3) {
    WeierstrassCurve e;
    e.a1 = Rational(1);
    e.a3 = a3;
    return e;
  };
  const auto in_image = [](int i, const Rational& j) {
    const RationalFunction f = jfamily(i);
    for (const auto& t : rational_roots(f.num() - QPoly::constant(j) * f.den())) {
      if (f.den()(t) != 0) return true;
    }
    return false;
  };
  for (long n = 2; n <= 6; ++n) {
    const Rational s = q(n, 7);
    const std::pair<int, WeierstrassCurve> curves[] = {
        {4, tate(s, Rational(0))},
        {5, tate(s, s)},
        {6, tate(s + s * s, s)},
        {7, tate(s * s * s - s * s, s * s - s)},
        {3, order3(s)},
    };
    for (const auto& [i, e] : curves) {
      CHECK(small_order(e, EPoint::affine(q(0), q(0))) == static_cast<unsigned>(i));
      INFO("i = " << i);
      CHECK(in_image(i, e.j_invariant()));
    }
    // y^2 = x(x^2 + nx + 1) has (0, 0) of order 2.
    WeierstrassCurve two;
    two.a2 = Rational(n + 3);
    two.a4 = Rational(1);
    CHECK(in_image(2, two.j_invariant()));
  }
  CHECK(jfamily_eval(4, -b) == tate(b, Rational(0)).j_invariant());
}

TEST_CASE("case 1 roots") {
  CHECK(case1_roots(Integer(135)) == zs({3}));
  CHECK(case1_roots(Integer(864)) == zs({-6}));
  CHECK(case1_roots(Integer(7)).empty());
  CHECK(case1_roots(Integer(-1)) == zs({-1}));
  for (long a = -40; a <= 40; ++a) {
    const Integer k = Integer(a) * a * a * (a + 2);
    if (k == 0) continue;
    const auto roots = case1_roots(k);
    CHECK(std::find(roots.begin(), roots.end(), Integer(a)) != roots.end());
  }
  const auto r = case1_report();
  CHECK(r.integral_k.empty());
  CHECK_FALSE(r.uses_imported_facts());
}

TEST_CASE("case 2 on E1") {
  const auto r = case2_e1();
  CHECK(r.integral_k == zs({-17, 0, 135, 368}));
  CHECK_FALSE(r.uses_imported_facts());
  // Independent check of the b = 1 branch: brute force over all integers a
  // with 2a - 3 | 729.
  std::set<Integer> ks;
  for (long a = -400; a <= 400; ++a) {
    if (729 % std::abs(2 * a - 3) != 0) continue;
    const Rational y(a), x = Rational(3) * y / (Rational(2) * y - Rational(3));
    const Rational k = x * x * x + x * x * y * y + y * y * y;
    if (k.is_integer()) ks.insert(k.num());
  }
  CHECK(ks == std::set<Integer>{Integer(-17), Integer(0), Integer(135), Integer(368)});
  // y = 366 is the b = 1, 2a - 3 = 729 branch.
  const Rational y(366), x = Rational(3) * y / (Rational(2) * y - Rational(3));
  CHECK_FALSE((x * x * x + x * x * y * y + y * y * y).is_integer());
}

TEST_CASE("case 2 on E3") {
  const auto r = case2_e3();
  CHECK(r.integral_k == zs({-1, 0, 135}));
  CHECK(r.uses_imported_facts());
  const auto pts = search_hyperelliptic(zs({1, 6, 39, 52, 39, 6, 1}), 1000);
  CHECK(pts.size() == 12);
  CHECK(torsion_subgroup(e3_curve(q(135))).structure() == "Z/2Z");
  CHECK(torsion_subgroup(e3_curve(q(-1))).structure() == "Z/2Z");
  CHECK(torsion_subgroup(e3_curve(q(1))).structure() == "trivial");
}

TEST_CASE("case 3") {
  const auto r = case3();
  CHECK(r.integral_k == zs({-56000, -72, -2, 0, 2058}));
  CHECK(torsion_subgroup(e1_curve(q(-72))).structure() == "Z/3Z");
  CHECK(torsion_subgroup(e3_curve(q(-2))).structure() == "Z/3Z");
}

TEST_CASE("case 4") {
  const auto r = case4();
  std::vector<Integer> nonzero;
  for (const auto& k : r.integral_k) {
    if (k != 0) nonzero.push_back(k);
  }
  CHECK(nonzero == zs({135}));
  const auto ks = all_k(r);
  CHECK(ks.count(q(0)));
  CHECK(ks.count(q(59049, 8)));
  CHECK(ks.count(q(-27, 16)));
  CHECK(case4_k(q(-2)) == 135);
  CHECK(case4_k(q(-3)) == 0);
  CHECK(case4_k(q(-9, 5)) == q(59049, 8));
  CHECK(case4_k(q(1)) == q(-27, 16));
  CHECK(torsion_subgroup(e1_curve(q(135))).structure() == "Z/4Z");
  CHECK(r.uses_imported_facts());
}

TEST_CASE("case 5") {
  const auto r = case5();
  CHECK(r.m_values == zs({0, 11967264}));
  CHECK(r.integral_k == zs({0, 864}));
  CHECK(all_k(r).count(q(-13851, 16)));
  for (const auto& m : r.m_values) {
    for (const auto& k : k_from_16k2_27k(m)) CHECK(Rational(16) * k * k + Rational(27) * k == Rational(m));
  }
  CHECK(torsion_subgroup(e1_curve(q(864))).structure() == "Z/5Z");
  CHECK(torsion_subgroup(e3_curve(q(864))).structure() == "trivial");
}

TEST_CASE("case 6") {
  const auto r = case6();
  CHECK(r.integral_k.empty());
  CHECK(r.rational_extras.empty());
  REQUIRE(r.local);
  CHECK(r.local->status == LocalStatus::kInsoluble);
  CHECK(search_hyperelliptic(zs({-64, 96, 60, 0, -15, -6, 1}), 1000).size() == 4);
  CHECK(r.uses_imported_facts());
  CHECK_THROWS_AS(case_reports(7), DomainError);
  CHECK(case_reports(2).size() == 2);
}

TEST_CASE("case sets carry the targeted torsion") {
  const std::pair<CaseReport, unsigned> runs[] = {{case3(), 3}, {case4(), 4}, {case5(), 5}};
  for (const auto& [r, n] : runs) {
    for (const auto& k : r.integral_k) {
      if (k == 0) continue;
      unsigned hits = 0;
      for (int i : {1, 3}) {
        const auto e = e_curve(i, Rational(k));
        for (const auto& p : torsion_subgroup(e).points) {
          if (!p.is_identity() && small_order(e, p) == n) ++hits;
        }
      }
      CHECK(hits > 0);
    }
  }
}

TEST_CASE("torsion families by parameter") {
  const auto c12 = param_k(ParamFamily::kC12, q(3));
  CHECK(c12.k == q(6561, 32));
  REQUIRE(c12.point);
  CHECK(*c12.point == CPoint::affine(q(9, 4), q(9, 2)));
  CHECK(c12.order == 2);

  const auto d33 = param_k(ParamFamily::kD33, q(1));
  CHECK(d33.k == -2);
  CHECK(d33.witnesses.front().first == 3);

  const auto d14 = param_k(ParamFamily::kD14, q(-2), q(-4));
  CHECK(d14.k == q(59049, 8));
  CHECK(d14.order == 4);
  CHECK_THROWS_AS(param_k(ParamFamily::kD14, q(-2), q(4)), DomainError);  // k = 0
  CHECK_THROWS_AS(param_k(ParamFamily::kD14, q(1), q(1)), DomainError);
  CHECK_THROWS_AS(param_k(ParamFamily::kC12, q(1)), DomainError);
  CHECK_THROWS_AS(param_k(ParamFamily::kD13, q(0)), DomainError);
  CHECK_THROWS_AS(param_k(ParamFamily::kD33, q(0)), DomainError);
  CHECK_THROWS_AS(param_k(ParamFamily::kD12, q(1), q(1)), DomainError);
  CHECK_THROWS_AS(parse_param_family("d15"), DomainError);
  CHECK(parse_param_family("d33") == ParamFamily::kD33);
}

TEST_CASE("torsion family certificates on random arguments") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  for (auto fam : {ParamFamily::kC12, ParamFamily::kD12, ParamFamily::kD13, ParamFamily::kD33}) {
    int done = 0;
    while (done < 100) {
      const Rational a{Integer(num(rng)), Integer(den(rng))};
      try {
        const auto r = param_k(fam, a);
        ++done;
        for (const auto& [i, p] : r.witnesses) {
          const auto e = e_curve(i, r.k);
          CHECK(e.contains(p));
          CHECK(small_order(e, p) == r.order);
        }
        if (r.point) CHECK(QuarticCurve(r.k).contains(*r.point));
      } catch (const DomainError&) {
      }
    }
  }
  // Points on y^2 = x^3 - 12x: multiples of (-2, 4) and their translates by (0, 0).
  const WeierstrassCurve d14 = [] {
    WeierstrassCurve e;
    e.a4 = Rational(-12);
    return e;
  }();
  const EPoint g = EPoint::affine(q(-2), q(4)), t = EPoint::affine(q(0), q(0));
  int verified = 0;
  EPoint p = g;
  for (int n = 1; n <= 5; ++n, p = d14.add(p, g)) {
    for (const auto& base : {p, d14.negate(p), d14.add(p, t), d14.negate(d14.add(p, t))}) {
      try {
        const auto r = param_k(ParamFamily::kD14, base.x, base.y);
        ++verified;
        for (const auto& [i, w] : r.witnesses) CHECK(small_order(e_curve(i, r.k), w) == 4u);
      } catch (const DomainError&) {
      }
    }
  }
  CHECK(verified >= 10);
}

TEST_CASE("stored models") {
  const auto models = stored_models();
  CHECK(models.size() == 11);
  for (const auto& m : models) {
    if (m.model) m.model->validate();
    if (m.insoluble_at) {
      CHECK(qp_soluble(*m.model, Integer(*m.insoluble_at)).status == LocalStatus::kInsoluble);
    }
  }
  const auto d18 = std::find_if(models.begin(), models.end(), [](const auto& m) { return m.name == "D18"; });
  REQUIRE(d18 != models.end());
  CHECK(d18->model->str() == "y^4 = t^8 - 16t^6 - 32t^5 + 64t^3 + 96t^2 + 64t + 16");
  const auto c13 = std::find_if(models.begin(), models.end(), [](const auto& m) { return m.name == "C13"; });
  REQUIRE(c13 != models.end());
  CHECK(c13->imported);
  CHECK(c13->curve->a1 == 1);
}
