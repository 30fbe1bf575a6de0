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

#include "ckpoints/errors.hpp"
#include "ckpoints/localsolve.hpp"
#include "doctest.h"

using namespace ckp;

namespace {

SuperellipticModel model(long c, unsigned e, std::initializer_list<long> f) {
  std::vector<Rational> v;
  for (long a : f) v.emplace_back(Integer(a));
  return SuperellipticModel{Integer(c), e, QPoly(std::move(v))};
}

const SuperellipticModel kOctic = model(9, 4, {1, 12, 42, 56, 35, 0, -14, -4, 1});
const SuperellipticModel kQuartic = model(9, 4, {1, 12, 14, -12, 1});
const SuperellipticModel kDegree12 =
    model(9, 4, {1, 12, 54, 128, 189, 180, 114, 36, -18, -28, -12, 0, 1});

long rval(const Rational& q, const Integer& p) {
  return static_cast<long>(valuation(q.num(), p)) - static_cast<long>(valuation(q.den(), p));
}

// Evaluates f at a witness, on whichever patch it lives.
Rational patch_value(const SuperellipticModel& m, const LocalWitness& w) {
  if (!w.at_infinity) return m.f(Rational(w.t));
  const unsigned n = (static_cast<unsigned>(m.f.degree()) + m.e - 1) / m.e;
  Rational out(0), u(w.t), upow(1);
  for (unsigned i = 0; i <= m.e * n; ++i) {
    const std::size_t j = m.e * n - i;
    if (j < m.f.coeffs().size()) out += m.f.coeffs()[j] * upow;
    upow *= u;
  }
  return out;
}

// The unit equation behind a witness y != 0 meets Hensel's criterion.
bool witness_lifts(const SuperellipticModel& m, const Integer& p, const LocalWitness& w) {
  const Rational fv = patch_value(m, w);
  if (w.y == 0) return fv == 0 || rval(fv, p) >= static_cast<long>(w.precision);
  const Rational cy = Rational(m.c) * pow(w.y, m.e);
  if (fv == 0 || rval(cy, p) != rval(fv, p)) return false;
  const long v = rval(fv, p);
  const Rational pv = pow(Rational(p), static_cast<unsigned>(std::abs(v)));
  const Rational diff = v >= 0 ? (cy - fv) / pv : (cy - fv) * pv;
  return diff == 0 || rval(diff, p) > 2 * static_cast<long>(valuation(Integer(m.e), p));
}

}  // namespace

TEST_CASE("local insolubility of the torsion models") {
  const auto octic = qp_soluble(kOctic, Integer(3));
  CHECK(octic.status == LocalStatus::kInsoluble);
  CHECK_FALSE(octic.witness);
  CHECK(qp_soluble(kQuartic, Integer(3)).status == LocalStatus::kInsoluble);
  CHECK(qp_soluble(kDegree12, Integer(2)).status == LocalStatus::kInsoluble);

  // Same f with c = 1 has the rational point t = 0, y = 1.
  for (long p : {2L, 3L, 5L, 7L}) {
    auto m = kOctic;
    m.c = 1;
    CHECK(qp_soluble(m, Integer(p)).status == LocalStatus::kSoluble);
  }
}

TEST_CASE("local solubility witness") {
  const auto m = model(1, 2, {1, 0, 0, 1});
  const auto v = qp_soluble(m, Integer(5));
  REQUIRE(v.status == LocalStatus::kSoluble);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->at_infinity);
  CHECK(v.witness->t == 0);
  CHECK(v.witness->y == 1);
  CHECK(witness_lifts(m, Integer(5), *v.witness));
  CHECK(m.str() == "y^2 = t^3 + 1");
  CHECK(SuperellipticModel{Integer(-3), 4, m.f}.str() == "-3 y^4 = t^3 + 1");
  CHECK(SuperellipticModel{Integer(-1), 2, m.f}.str() == "-y^2 = t^3 + 1");
}

TEST_CASE("local solubility errors") {
  CHECK_THROWS_AS(qp_soluble(kQuartic, Integer(9)), DomainError);
  CHECK_THROWS_AS(qp_soluble(kQuartic, Integer(1)), DomainError);
  CHECK_THROWS_AS(qp_soluble(kQuartic, Integer(3), 0), DomainError);
  CHECK_THROWS_AS(qp_soluble(model(0, 2, {1}), Integer(3)), DomainError);
  CHECK_THROWS_AS(qp_soluble(model(1, 3, {1}), Integer(3)), DomainError);
  CHECK_THROWS_AS(qp_soluble(model(1, 2, {}), Integer(3)), DomainError);
}

TEST_CASE("local solubility properties on random models") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-20, 20), cdist(-12, 12);
  std::uniform_int_distribution<int> deg(1, 6);
  const long primes[] = {2, 3, 5, 7, 11};
  int soluble = 0, insoluble = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned e = trial % 2 ? 4 : 2;
    long c = 0;
    while (c == 0) c = cdist(rng);
    std::vector<Rational> f(deg(rng) + 1);
    for (auto& a : f) a = Rational(Integer(coeff(rng)));
    if (f.back() == 0) f.back() = Rational(1);
    const SuperellipticModel m{Integer(c), e, QPoly(f)};
    const Integer p(primes[trial % 5]);

    const auto shallow = qp_soluble(m, p, 4);
    const auto deep = qp_soluble(m, p, 16);
    if (shallow.status != LocalStatus::kUnknown) CHECK(deep.status == shallow.status);
    if (deep.status == LocalStatus::kSoluble) {
      ++soluble;
      REQUIRE(deep.witness);
      CHECK(witness_lifts(m, p, *deep.witness));
    }
    if (deep.status == LocalStatus::kInsoluble) ++insoluble;

    // c = 1 and f(0) = 1 always has the point (0, 1).
    f[0] = Rational(1);
    const SuperellipticModel obvious{Integer(1), e, QPoly(f)};
    CHECK(qp_soluble(obvious, p).status == LocalStatus::kSoluble);
  }
  CHECK(soluble > 0);
  CHECK(insoluble > 0);
}
