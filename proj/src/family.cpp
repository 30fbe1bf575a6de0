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

#include "ckpoints/family.hpp"

#include <algorithm>

namespace ckp {

CPoint::CPoint(Integer x, Integer y, Integer z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z_.get_mpz_t());
  if (g == 0) throw DomainError("(0 : 0 : 0) is not a projective point");
  const Integer& last = z_ != 0 ? z_ : (y_ != 0 ? y_ : x_);
  if (last < 0) g = -g;
  x_ /= g;
  y_ /= g;
  z_ /= g;
}

CPoint CPoint::affine(const Rational& x, const Rational& y) {
  Integer z;
  mpz_lcm(z.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
  return {x.num() * (z / x.den()), y.num() * (z / y.den()), z};
}

Rational CPoint::affine_x() const {
  if (at_infinity()) throw DomainError("point at infinity has no affine coordinates");
  return {x_, z_};
}

Rational CPoint::affine_y() const {
  if (at_infinity()) throw DomainError("point at infinity has no affine coordinates");
  return {y_, z_};
}

std::string CPoint::str() const {
  if (at_infinity()) return "(" + x_.get_str() + " : " + y_.get_str() + " : 0)";
  return "(" + affine_x().str() + " : " + affine_y().str() + " : 1)";
}

std::strong_ordering operator<=>(const CPoint& a, const CPoint& b) {
  if (a.at_infinity() != b.at_infinity()) {
    return a.at_infinity() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.at_infinity()) {
    // (1 : 0 : 0) before (0 : 1 : 0)
    return cmp(b.x_, a.x_) <=> 0;
  }
  if (auto c = a.affine_x() <=> b.affine_x(); c != 0) return c;
  return a.affine_y() <=> b.affine_y();
}

QuarticCurve::QuarticCurve(Rational k) : k_(std::move(k)) {
  if (k_.is_zero() || k_ == Rational(Integer(-27), Integer(16))) {
    throw DomainError("C_k is singular for k = " + k_.str());
  }
}

bool QuarticCurve::contains(const CPoint& p) const {
  const Integer &x = p.x(), &y = p.y(), &z = p.z();
  const Integer z2 = z * z;
  const Integer lhs = x * x * x * z + x * x * y * y + y * y * y * z;
  return lhs * k_.den() == k_.num() * z2 * z2;
}

QPoly QuarticCurve::fiber(const Rational& x0) const {
  return QPoly({x0 * x0 * x0 - k_, Rational(0), x0 * x0, Rational(1)});
}

WeierstrassCurve e1_curve(const Rational& k) {
  WeierstrassCurve e;
  e.a1 = 3;
  e.a6 = k;
  return e;
}

WeierstrassCurve e2_curve(const Rational& k) {
  WeierstrassCurve e;
  e.a2 = Rational(4) * k;
  e.a6 = Rational(16) * k * k;
  return e;
}

WeierstrassCurve e3_curve(const Rational& k) {
  WeierstrassCurve e;
  e.a2 = -27;
  e.a6 = Rational(-1728) * k;
  return e;
}

WeierstrassCurve e_curve(int i, const Rational& k) {
  switch (i) {
    case 1:
      return e1_curve(k);
    case 2:
      return e2_curve(k);
    case 3:
      return e3_curve(k);
    default:
      throw DomainError("curve index must be 1, 2 or 3");
  }
}

const WeierstrassCurve& Family::e(int i) const {
  switch (i) {
    case 1:
      return e1;
    case 2:
      return e2;
    case 3:
      return e3;
    default:
      throw DomainError("curve index must be 1, 2 or 3");
  }
}

Family make_family(const Rational& k) {
  return {QuarticCurve(k), e1_curve(k), e2_curve(k), e3_curve(k)};
}

EPoint phi(int i, const QuarticCurve& c, const CPoint& p) {
  if (!c.contains(p)) throw DomainError("point " + p.str() + " is not on C_k");
  const WeierstrassCurve e = e_curve(i, c.k());
  if (p.at_infinity()) return EPoint::identity();
  const auto image = phi_affine(i, c.k(), p.affine_x(), p.affine_y());
  if (!image) return EPoint::identity();
  EPoint q = EPoint::affine(image->first, image->second);
  if (!e.contains(q)) throw IntegrityError("image of " + p.str() + " is off E_" + std::to_string(i));
  return q;
}

namespace {

// Constraint polynomials in y over Q[x] whose common zeros with the fiber
// are the affine points mapping to (X, Y).
std::pair<QPoly2, QPoly2> constraints(int i, const Rational& k, const Rational& X, const Rational& Y) {
  const auto q = [](std::initializer_list<Rational> c) { return QPoly(std::vector<Rational>(c)); };
  const Rational zero(0);
  if (i == 2) {
    // -4x^3 - 4xy - X and -8x^4 y + 16x^3 + 8y^3 - 12k - Y
    QPoly2 c1({q({-X, zero, zero, Rational(-4)}), q({zero, Rational(-4)})});
    QPoly2 c2({q({Rational(-12) * k - Y, zero, zero, Rational(16)}), q({zero, zero, zero, zero, Rational(-8)}),
               QPoly(), q({Rational(8)})});
    return {c1, c2};
  }
  // i == 3: A(x, y) - X (x - y)^2 and B(x, y) - Y (x - y)^3, coefficients of y^j
  QPoly2 c1({q({zero, zero, Rational(36) - X, Rational(12)}),
             q({zero, Rational(-36) + Rational(2) * X, Rational(12)}),
             q({Rational(36) - X, Rational(12), Rational(16)}), q({Rational(12)})});
  QPoly2 c2({q({zero, zero, zero, Rational(108) - Y, Rational(108)}),
             q({zero, zero, Rational(3) * Y, zero, Rational(72)}),
             q({zero, Rational(-3) * Y, Rational(216), Rational(72)}),
             q({Rational(108) + Y, zero, Rational(72), Rational(64)}), q({Rational(108), Rational(72)})});
  return {c1, c2};
}

void add_unique(std::vector<CPoint>& out, const CPoint& p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

}  // namespace

std::vector<CPoint> preimages(int i, const QuarticCurve& c, const EPoint& q) {
  const WeierstrassCurve e = e_curve(i, c.k());
  if (!e.contains(q)) throw DomainError("point " + to_string(q) + " is not on E_" + std::to_string(i));
  std::vector<CPoint> out;
  if (q.is_identity()) {
    out.emplace_back(Integer(1), Integer(0), Integer(0));
    out.emplace_back(Integer(0), Integer(1), Integer(0));
    if (i == 3) {
      // x = y: the fiber becomes x^4 + 2x^3 = k.
      const QPoly diag({-c.k(), Rational(0), Rational(0), Rational(2), Rational(1)});
      for (const auto& a : rational_roots(diag)) out.push_back(CPoint::affine(a, a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Rational> xs;
  if (i == 1) {
    // x + y = -X and xy = Y.
    const QPoly quad({q.y, q.x, Rational(1)});
    xs = rational_roots(quad);
  } else {
    const QPoly2 fiber({QPoly({-c.k(), Rational(0), Rational(0), Rational(1)}), QPoly(),
                        QPoly({Rational(0), Rational(0), Rational(1)}), QPoly::constant(Rational(1))});
    const auto [c1, c2] = constraints(i, c.k(), q.x, q.y);
    const QPoly r = gcd(resultant_in_y(fiber, c1), resultant_in_y(fiber, c2));
    if (r.is_zero()) throw IntegrityError("preimage elimination degenerated");
    xs = rational_roots(r);
  }
  for (const auto& x0 : xs) {
    for (const auto& y0 : rational_roots(c.fiber(x0))) {
      const CPoint p = CPoint::affine(x0, y0);
      if (phi(i, c, p) == q) add_unique(out, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenericPoint e2_generic_point(const Rational& k) {
  if (k.is_zero()) throw DomainError("E_{2,k} is singular at k = 0");
  const WeierstrassCurve e = e2_curve(k);
  GenericPoint g{EPoint::affine(Rational(0), Rational(4) * k), std::nullopt};
  g.order = small_order(e, g.point);
  return g;
}

}  // namespace ckp
