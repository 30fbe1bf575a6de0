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

#include "ckpoints/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ckpoints/integer.hpp"

namespace ckp {

std::string to_string(const EPoint& p) {
  if (p.infinity) return "O";
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}

std::string to_string(const WeierstrassCurve& e) {
  std::ostringstream os;
  os << "[" << e.a1 << ", " << e.a2 << ", " << e.a3 << ", " << e.a4 << ", " << e.a6 << "]";
  return os.str();
}

template <class F>
Polynomial<F> division_polynomial(const Weierstrass<F>& e, unsigned n) {
  if (n < 2 || n > 12) throw DomainError("division polynomial index must lie in 2..12");
  using P = Polynomial<F>;
  const F b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
  const P psi2_sq({b6, F(2) * b4, b2, F(4)});
  const P psi2_sq_sq = psi2_sq * psi2_sq;

  std::vector<P> g(n + 3);
  g[1] = P::constant(F(1));
  g[2] = P::constant(F(1));
  g[3] = P({b8, F(3) * b6, F(3) * b4, b2, F(3)});
  g[4] = P({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, F(10) * b8, F(10) * b6, F(5) * b4, b2, F(2)});
  for (unsigned k = 5; k <= n; ++k) {
    const unsigned m = k / 2;
    if (k % 2 == 1) {
      const P first = g[m + 2] * pow(g[m], 3u);
      const P second = g[m - 1] * pow(g[m + 1], 3u);
      g[k] = (m % 2 == 0) ? psi2_sq_sq * first - second : first - psi2_sq_sq * second;
    } else {
      g[k] = g[m] * (g[m + 2] * g[m - 1] * g[m - 1] - g[m - 2] * g[m + 1] * g[m + 1]);
    }
  }
  return g[n];
}

template Polynomial<Rational> division_polynomial(const Weierstrass<Rational>&, unsigned);
template Polynomial<RationalFunction> division_polynomial(const Weierstrass<RationalFunction>&,
                                                          unsigned);

std::optional<unsigned> small_order(const WeierstrassCurve& e, const EPoint& p) {
  if (!e.contains(p)) throw DomainError("point is not on the curve");
  EPoint acc = p;
  for (unsigned n = 1; n <= 12; ++n) {
    if (acc.is_identity()) return n;
    acc = e.add_unchecked(acc, p);
  }
  return std::nullopt;
}

bool has_infinite_order(const WeierstrassCurve& e, const EPoint& p) {
  if (p.is_identity()) throw DomainError("has_infinite_order called on the identity");
  return !small_order(e, p).has_value();
}

EPoint ShortModel::to_short(const EPoint& p) const {
  if (p.infinity) return p;
  const Rational u2 = u * u;
  const Rational xi = p.x + source.b2() / Rational(12);
  const Rational eta = p.y + (source.a1 * p.x + source.a3) / Rational(2);
  return EPoint::affine(u2 * xi, u2 * u * eta);
}

EPoint ShortModel::from_short(const EPoint& p) const {
  if (p.infinity) return p;
  const Rational u2 = u * u;
  const Rational x = p.x / u2 - source.b2() / Rational(12);
  const Rational y = p.y / (u2 * u) - (source.a1 * x + source.a3) / Rational(2);
  return EPoint::affine(x, y);
}

ShortModel short_model(const WeierstrassCurve& e) {
  if (e.discriminant().is_zero()) throw DomainError("singular Weierstrass model");
  ShortModel m;
  m.source = e;
  m.curve.a4 = -e.c4() / Rational(48);
  m.curve.a6 = -e.c6() / Rational(864);
  return m;
}

namespace {

Rational scaled(const Rational& v, const Rational& u, unsigned power) { return v * pow(u, power); }

}  // namespace

ShortModel short_integral_model(const WeierstrassCurve& e) {
  ShortModel m = short_model(e);
  const Rational a = m.A(), b = m.B();

  // Clear denominators prime by prime: need p^(4e) | den(A)^-1 ... etc.
  Integer den = a.den() * b.den();
  Rational u = 1;
  if (den > 1) {
    for (const auto& [p, ignored] : factor(den)) {
      const unsigned va = a.den() % p == 0 ? valuation(a.den(), p) : 0;
      const unsigned vb = b.den() % p == 0 ? valuation(b.den(), p) : 0;
      const unsigned need = std::max((va + 3) / 4, (vb + 5) / 6);
      u *= pow(Rational(p), need);
    }
  }
  Rational ia = scaled(a, u, 4), ib = scaled(b, u, 6);

  // Remove primes p with p^4 | A and p^6 | B.
  const Integer probe = ia.is_zero() ? ib.num() : ia.num();
  if (probe != 0 && abs(probe) <= kFactorCap) {
    for (const auto& [p, exponent] : factor(probe)) {
      const Integer p4 = p * p * p * p, p6 = p4 * p * p;
      while ((ia.is_zero() || ia.num() % p4 == 0) && (ib.is_zero() || ib.num() % p6 == 0) &&
             !(ia.is_zero() && ib.is_zero())) {
        ia = ia / Rational(p4);
        ib = ib / Rational(p6);
        u = u / Rational(p);
      }
    }
  }
  m.u = u;
  m.curve.a4 = ia;
  m.curve.a6 = ib;
  return m;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Rational& d) {
  if (d.is_zero()) throw DomainError("quadratic twist by zero");
  const ShortModel m = short_model(e);
  WeierstrassCurve out;
  out.a4 = m.A() * d * d;
  out.a6 = m.B() * d * d * d;
  return out;
}

std::vector<EPoint> points_with_x(const WeierstrassCurve& e, const Rational& x) {
  // y^2 + b y - c = 0
  const Rational b = e.a1 * x + e.a3;
  const Rational c = ((x + e.a2) * x + e.a4) * x + e.a6;
  const Rational disc = b * b + Rational(4) * c;
  std::vector<EPoint> out;
  if (disc.sign() < 0) return out;
  Integer rn, rd;
  if (!exact_root(disc.num(), 2, rn) || !exact_root(disc.den(), 2, rd)) return out;
  const Rational r{rn, rd};
  out.push_back(EPoint::affine(x, (-b - r) / Rational(2)));
  if (r != 0) out.push_back(EPoint::affine(x, (-b + r) / Rational(2)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_rational_power(const Rational& q, unsigned r) {
  Integer root;
  return exact_root(q.num(), r, root) && exact_root(q.den(), r, root);
}

}  // namespace

bool isomorphic_over_q(const WeierstrassCurve& e, const WeierstrassCurve& f) {
  if (!(e.j_invariant() == f.j_invariant())) return false;
  const Rational c4e = e.c4(), c6e = e.c6(), c4f = f.c4(), c6f = f.c6();
  if (c4e.is_zero()) return is_rational_power(c6f / c6e, 6);
  if (c6e.is_zero()) return is_rational_power(c4f / c4e, 4);
  return is_rational_power((c6f * c4e) / (c6e * c4f), 2);
}

std::string TorsionGroup::structure() const {
  if (invariants.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i != 0) out += " x ";
    out += "Z/" + std::to_string(invariants[i]) + "Z";
  }
  return out;
}

unsigned long count_points_short(const Integer& a, const Integer& b, unsigned long p) {
  const Integer mod(p);
  Integer ra, rb;
  mpz_fdiv_r(ra.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  mpz_fdiv_r(rb.get_mpz_t(), b.get_mpz_t(), mod.get_mpz_t());
  const unsigned long am = ra.get_ui(), bm = rb.get_ui();
  // Squares table keeps this O(p).
  std::vector<unsigned char> is_square(p, 0);
  for (unsigned long y = 0; y < p; ++y) is_square[y * y % p] = 1;
  unsigned long count = 1;
  for (unsigned long x = 0; x < p; ++x) {
    const unsigned long rhs = ((x * x % p) * x + am * x + bm) % p;
    if (rhs == 0) {
      count += 1;
    } else if (is_square[rhs]) {
      count += 2;
    }
  }
  return count;
}

namespace {

constexpr unsigned kReductionPrimes = 12;

Integer reduction_bound(const Integer& a, const Integer& b, const Integer& disc) {
  Integer bound = 0;
  unsigned used = 0;
  for (std::uint32_t p : primes_up_to(5000)) {
    if (p < 5 || mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    const Integer count(count_points_short(a, b, p));
    mpz_gcd(bound.get_mpz_t(), bound.get_mpz_t(), count.get_mpz_t());
    if (++used == kReductionPrimes) break;
  }
  return bound;
}

std::vector<Integer> integer_roots(const QPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  for (const auto& r : rational_roots(p)) {
    if (r.is_integer()) out.push_back(r.num());
  }
  return out;
}

void add_points_with_x(const WeierstrassCurve& s, const Integer& x, std::vector<EPoint>& out) {
  const Rational rx(x);
  const Rational rhs = rx * rx * rx + s.a4 * rx + s.a6;
  if (rhs.sign() < 0) return;
  Integer y;
  if (!exact_root(rhs.num(), 2, y)) return;
  out.push_back(EPoint::affine(rx, Rational(y)));
  if (y != 0) out.push_back(EPoint::affine(rx, Rational(Integer(-y))));
}

bool mazur_admissible(const std::vector<unsigned>& inv) {
  if (inv.empty()) return true;
  if (inv.size() == 1) return inv[0] <= 12 && inv[0] != 11;
  return inv.size() == 2 && inv[0] == 2 && inv[1] % 2 == 0 && inv[1] <= 8;
}

TorsionComputation torsion_impl(const WeierstrassCurve& e, std::optional<TorsionMethod> forced) {
  const ShortModel model = short_integral_model(e);
  const WeierstrassCurve& s = model.curve;
  const Integer a = s.a4.num(), b = s.a6.num();
  const Integer disc = 4 * a * a * a + 27 * b * b;
  const Integer bound = reduction_bound(a, b, disc);

  TorsionMethod method = abs(disc) <= kFactorCap ? TorsionMethod::kDiscriminantDivisors
                                                 : TorsionMethod::kDivisionPolynomials;
  if (forced) method = *forced;

  const QPoly cubic({Rational(b), Rational(a), Rational(0), Rational(1)});
  std::vector<EPoint> candidates;
  if (method == TorsionMethod::kDiscriminantDivisors) {
    for (const auto& x : integer_roots(cubic)) add_points_with_x(s, x, candidates);
    for (const auto& y : square_root_divisors(disc)) {
      const QPoly shifted = cubic - QPoly::constant(Rational(Integer(y * y)));
      for (const auto& x : integer_roots(shifted)) {
        candidates.push_back(EPoint::affine(Rational(x), Rational(y)));
        candidates.push_back(EPoint::affine(Rational(x), Rational(Integer(-y))));
      }
    }
  } else {
    if (bound % 2 == 0) {
      for (const auto& x : integer_roots(cubic)) add_points_with_x(s, x, candidates);
    }
    for (unsigned n = 3; n <= 12; ++n) {
      if (bound % n != 0) continue;
      for (const auto& x : integer_roots(division_polynomial(s, n))) add_points_with_x(s, x, candidates);
    }
  }

  std::vector<EPoint> torsion{EPoint::identity()};
  unsigned two_torsion = 0;
  unsigned max_order = 1;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    if (!s.contains(c)) continue;
    const auto order = small_order(s, c);
    if (!order) continue;
    torsion.push_back(model.from_short(c));
    if (*order == 2) ++two_torsion;
    max_order = std::max(max_order, *order);
  }
  std::sort(torsion.begin(), torsion.end());

  TorsionGroup group;
  group.points = std::move(torsion);
  const unsigned n = group.order();
  if (two_torsion == 3) {
    group.invariants = {2, n / 2};
    if (max_order != n / 2) throw IntegrityError("torsion points do not form Z/2 x Z/2m");
  } else if (n > 1) {
    group.invariants = {n};
    if (max_order != n) throw IntegrityError("torsion points do not form a cyclic group");
  }
  if (!mazur_admissible(group.invariants)) {
    throw IntegrityError("torsion structure " + group.structure() + " is not on Mazur's list");
  }
  if (bound % n != 0) throw IntegrityError("torsion order does not divide the reduction bound");
  return {std::move(group), method, bound};
}

}  // namespace

TorsionComputation compute_torsion(const WeierstrassCurve& e) { return torsion_impl(e, std::nullopt); }

TorsionGroup torsion_subgroup(const WeierstrassCurve& e) { return torsion_impl(e, std::nullopt).group; }

TorsionGroup torsion_subgroup(const WeierstrassCurve& e, TorsionMethod method) {
  return torsion_impl(e, method).group;
}

}  // namespace ckp
