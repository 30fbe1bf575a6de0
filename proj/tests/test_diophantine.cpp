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

#include "ckpoints/diophantine.hpp"
#include "doctest.h"

using namespace ckp;

namespace {

ThueForm form(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ThueForm(v);
}

// u^4 - 8u^3 v + 6u^2 v^2 - 8u v^3 + v^4
const ThueForm kQuartic = form({1, -8, 6, -8, 1});

QPoly case5_phi() { return pow(qpoly({1, -12, 14, 12, 1}), 3u); }
QPoly case5_psi() { return qpoly({0, 0, 0, 0, 0, -19683, 19683 * 11, 19683}); }

}  // namespace

TEST_CASE("Thue forms") {
  CHECK(kQuartic(Integer(1), Integer(0)) == 1);
  CHECK(kQuartic(Integer(1), Integer(1)) == -8);
  CHECK(kQuartic.str() == "u^4 - 8u^3v + 6u^2v^2 - 8uv^3 + v^4");
  CHECK_THROWS_AS(form({1, 2, 3}), DomainError);
  CHECK_THROWS_AS(form({0, 0, 0, 0}), DomainError);
}

TEST_CASE("bounded Thue solutions") {
  CHECK(thue_bounded(kQuartic, Integer(1), 100) ==
        std::vector<IntPair>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(thue_bounded(kQuartic, Integer(9), 100).empty());
  CHECK(thue_bounded(form({-12, 0, 0, 0, 1}), Integer(1), 100) == std::vector<IntPair>{{-1, 0}, {1, 0}});
  CHECK(thue_bounded(form({-3, 0, 0, 0, 4}), Integer(1), 100) ==
        std::vector<IntPair>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  // Leading coefficient zero: u v (u + v) (u - 2v) = m.
  const ThueForm degenerate = form({0, -2, -1, 1, 0});
  CHECK(thue_bounded(degenerate, Integer(0), 8) == thue_bounded_serial(degenerate, Integer(0), 8));
  CHECK(thue_bounded(degenerate, Integer(-4), 20) == thue_bounded_serial(degenerate, Integer(-4), 20));
}

TEST_CASE("Thue kernels agree on random forms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-6, 6), deg(3, 5), val(-60, 60);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    const ThueForm f(c);
    // Half the targets are values actually attained.
    const Integer m = trial % 2 == 0 ? f(Integer(val(rng) % 7), Integer(val(rng) % 7)) : Integer(val(rng));
    const auto fast = thue_bounded(f, m, 25);
    CHECK(fast == thue_bounded_serial(f, m, 25));
    for (const auto& [u, v] : fast) CHECK(f(Integer(u), Integer(v)) == m);
    if (f.degree() % 2 == 0) {
      const std::set<IntPair> s(fast.begin(), fast.end());
      for (const auto& [u, v] : fast) CHECK(s.count({-u, -v}) == 1);
    }
  }
}

TEST_CASE("gcd bound lemma") {
  const QPoly phi3 = pow(qpoly({1, 1}), 3u) * qpoly({-3, 1});
  const QPoly psi3 = qpoly({0, 0, 0, -3, -2});
  const auto c3 = gcd_bound(phi3, psi3);
  CHECK(c3.f * phi3 + c3.g * psi3 == qpoly({1}));
  CHECK(c3.r == 243);

  const auto c5 = gcd_bound(case5_phi(), case5_psi());
  CHECK(c5.f * case5_phi() + c5.g * case5_psi() == qpoly({1}));
  CHECK(c5.r == 2460375);
  // The other sign of the constant term gives a bound that misses 2460375.
  const auto other = gcd_bound(pow(qpoly({-1, -12, 14, 12, 1}), 3u), case5_psi());
  CHECK(other.r != 2460375);

  const auto trivial = gcd_bound(qpoly({0, 1}), qpoly({1, 1}));
  CHECK(trivial.a == 1);
  CHECK(trivial.a0 == 1);
  CHECK(trivial.r == 1);

  CHECK_THROWS_AS(gcd_bound(qpoly({-1, 0, 1}), qpoly({1, 1})), DomainError);
  CHECK_THROWS_AS(gcd_bound(QPoly({Rational(Integer(1), Integer(2)), Rational(1)}), qpoly({1, 1})),
                  DomainError);

  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> d(-2000, 2000);
  for (const auto& [cert, stated] : {std::pair{c3, Integer(243)}, std::pair{c5, Integer(2460375)}}) {
    Integer bound;
    mpz_gcd(bound.get_mpz_t(), cert.r.get_mpz_t(), stated.get_mpz_t());
    int sampled = 0;
    while (sampled < 200) {
      const long m = d(rng), n = std::abs(d(rng));
      if (n == 0 || std::gcd(m, n) != 1) continue;
      const Integer g = homogenized_gcd(cert.phi, cert.psi, Integer(m), Integer(n));
      CHECK(bound % g == 0);
      ++sampled;
    }
  }
}

TEST_CASE("Case 3 divisor systems") {
  const auto sols = case3_divisor_solve();
  std::set<Rational> integral;
  bool saw_unit = false;
  for (const auto& s : sols) {
    const Integer u(s.u), v(s.v);
    CHECK((u + v) * (u + v) * (u + v) * (u - 3 * v) == s.d);
    CHECK(s.k == Rational(u * u * u * (-2 * u - 3 * v), s.d));
    CHECK(u + v != 0);
    if (s.k.is_integer()) integral.insert(s.k);
    if (s.d == 1 && s.d1 == 1) {
      CHECK(s.u == 1);
      CHECK(s.v == 0);
      CHECK(s.k == Rational(-2));
      saw_unit = true;
    }
  }
  CHECK(saw_unit);
  CHECK(integral == std::set<Rational>{-56000, -72, -2, 0, 2058});
}

TEST_CASE("Pell boxes") {
  CHECK(pell_bounded(1, 5) == std::vector<IntPair>{{-2, -1}, {-2, 1}, {-1, 0}, {1, 0}, {2, -1}, {2, 1}});
  CHECK(pell_bounded(-2, 5) == std::vector<IntPair>{{-5, -3}, {-5, 3}, {-1, -1}, {-1, 1},
                                                    {1, -1}, {1, 1}, {5, -3}, {5, 3}});
  CHECK(pell_bounded(5, 50).empty());
}

TEST_CASE("16k^2 + 27k = m") {
  CHECK(k_from_16k2_27k(Integer(11967264)) ==
        std::vector<Rational>{Rational(Integer(-13851), Integer(16)), 864});
  CHECK(k_from_16k2_27k(Integer(0)) == std::vector<Rational>{Rational(Integer(-27), Integer(16)), 0});
  CHECK(k_from_16k2_27k(Integer(1)).empty());
}
