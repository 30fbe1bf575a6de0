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

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ckpoints/errors.hpp"
#include "ckpoints/polynomial.hpp"
#include "ckpoints/rational.hpp"
#include "ckpoints/rational_function.hpp"

namespace ckp {

/// Point on a Weierstrass curve: the identity or an affine pair.
template <class F>
struct Point {
  bool infinity = true;
  F x{};
  F y{};

  static Point identity() { return {}; }
  static Point affine(F px, F py) { return {false, std::move(px), std::move(py)}; }
  bool is_identity() const { return infinity; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

using EPoint = Point<Rational>;

inline bool operator<(const EPoint& a, const EPoint& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const EPoint& p);
inline std::ostream& operator<<(std::ostream& os, const EPoint& p) { return os << to_string(p); }

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field F.
template <class F>
struct Weierstrass {
  F a1{}, a2{}, a3{}, a4{}, a6{};

  F b2() const { return a1 * a1 + F(4) * a2; }
  F b4() const { return F(2) * a4 + a1 * a3; }
  F b6() const { return a3 * a3 + F(4) * a6; }
  F b8() const {
    return a1 * a1 * a6 + F(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  F c4() const { return b2() * b2() - F(24) * b4(); }
  F c6() const { return -(b2() * b2() * b2()) + F(36) * b2() * b4() - F(216) * b6(); }
  F discriminant() const {
    const F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - F(8) * B4 * B4 * B4 - F(27) * B6 * B6 + F(9) * B2 * B4 * B6;
  }
  /// c4^3 / discriminant; DomainError on a singular model.
  F j_invariant() const {
    const F d = discriminant();
    if (d.is_zero()) throw DomainError("j-invariant of a singular Weierstrass model");
    const F c = c4();
    return c * c * c / d;
  }

  /// Left side minus right side of the equation at (x, y).
  F equation(const F& x, const F& y) const {
    return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
  }
  bool contains(const Point<F>& p) const { return p.infinity || equation(p.x, p.y).is_zero(); }

  Point<F> negate(const Point<F>& p) const {
    if (p.infinity) return p;
    return Point<F>::affine(p.x, -p.y - a1 * p.x - a3);
  }

  /// Group law; DomainError if either point is off the curve.
  Point<F> add(const Point<F>& p, const Point<F>& q) const {
    if (!contains(p) || !contains(q)) throw DomainError("point is not on the curve");
    return add_unchecked(p, q);
  }

  Point<F> add_unchecked(const Point<F>& p, const Point<F>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F lambda, nu;
    if (p.x == q.x) {
      const F denom = F(2) * p.y + a1 * p.x + a3;
      if (!(p.y == q.y) || denom.is_zero()) return Point<F>::identity();
      lambda = (F(3) * p.x * p.x + F(2) * a2 * p.x + a4 - a1 * p.y) / denom;
      nu = (-(p.x * p.x * p.x) + a4 * p.x + F(2) * a6 - a3 * p.y) / denom;
    } else {
      const F dx = q.x - p.x;
      lambda = (q.y - p.y) / dx;
      nu = (p.y * q.x - q.y * p.x) / dx;
    }
    const F x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    const F y3 = -(lambda + a1) * x3 - nu - a3;
    return Point<F>::affine(x3, y3);
  }

  Point<F> multiply(long n, const Point<F>& p) const {
    if (!contains(p)) throw DomainError("point is not on the curve");
    Point<F> base = n < 0 ? negate(p) : p;
    unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Point<F> acc = Point<F>::identity();
    while (m != 0) {
      if (m & 1UL) acc = add_unchecked(acc, base);
      m >>= 1UL;
      if (m != 0) base = add_unchecked(base, base);
    }
    return acc;
  }
};

using WeierstrassCurve = Weierstrass<Rational>;

std::string to_string(const WeierstrassCurve& e);

/// Division polynomial in x alone. For even n the factor 2y + a1 x + a3 is
/// divided out, so the roots are exactly the x-coordinates of the points P
/// with nP = O that are not 2-torsion; for odd n the roots are the
/// x-coordinates of all nontrivial n-torsion. DomainError unless 2 <= n <= 12.
template <class F>
Polynomial<F> division_polynomial(const Weierstrass<F>& e, unsigned n);

/// The rational points of E with the given x-coordinate (0, 1 or 2 of them).
std::vector<EPoint> points_with_x(const WeierstrassCurve& e, const Rational& x);

/// Order of P if it is at most 12, otherwise nullopt (P of infinite order,
/// by Mazur's bound).
std::optional<unsigned> small_order(const WeierstrassCurve& e, const EPoint& p);

/// True iff nP != O for all 1 <= n <= 12. DomainError for the identity.
bool has_infinite_order(const WeierstrassCurve& e, const EPoint& p);

/// Change of variables between a long model and y^2 = x^3 + A x + B:
/// X = u^2 (x + b2/12), Y = u^3 (y + (a1 x + a3)/2).
struct ShortModel {
  WeierstrassCurve source;
  WeierstrassCurve curve;  // a1 = a2 = a3 = 0
  Rational u{1};

  EPoint to_short(const EPoint& p) const;
  EPoint from_short(const EPoint& p) const;
  const Rational& A() const { return curve.a4; }
  const Rational& B() const { return curve.a6; }
};

/// Short model with u = 1: A = -c4/48, B = -c6/864.
ShortModel short_model(const WeierstrassCurve& e);

/// Short model with integer A, B and the smallest admissible |u|
/// (no prime p with p^4 | A and p^6 | B remains).
ShortModel short_integral_model(const WeierstrassCurve& e);

/// y^2 = x^3 + A D^2 x + B D^3 from the short model of E. DomainError if D = 0.
WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Rational& d);

/// Isomorphism over Q (admissible change of variables exists).
bool isomorphic_over_q(const WeierstrassCurve& e, const WeierstrassCurve& f);

/// Torsion subgroup with its structure drawn from Mazur's list.
struct TorsionGroup {
  std::vector<unsigned> invariants;  // {} trivial, {n} cyclic, {2, 2m}
  std::vector<EPoint> points;        // sorted, identity first

  unsigned order() const { return static_cast<unsigned>(points.size()); }
  std::string structure() const;  // "trivial", "Z/5Z", "Z/2Z x Z/4Z"
};

/// Which Nagell-Lutz candidate route produced a torsion group.
enum class TorsionMethod { kDiscriminantDivisors, kDivisionPolynomials };

struct TorsionComputation {
  TorsionGroup group;
  TorsionMethod method;
  Integer reduction_bound;  // gcd of #E(F_p) over the sampled good primes
};

/// Torsion via Nagell-Lutz on the short integral model. Candidates come from
/// y = 0 or y^2 | disc when the discriminant is within the factorization cap,
/// otherwise from integer roots of the division polynomials whose index
/// divides the reduction bound. Every point's order is verified by addition.
TorsionComputation compute_torsion(const WeierstrassCurve& e);
TorsionGroup torsion_subgroup(const WeierstrassCurve& e);

/// Forces one candidate route (tests compare the two).
TorsionGroup torsion_subgroup(const WeierstrassCurve& e, TorsionMethod method);

/// #E(F_p) for a short model with integer coefficients and good reduction at p.
unsigned long count_points_short(const Integer& a, const Integer& b, unsigned long p);

}  // namespace ckp
