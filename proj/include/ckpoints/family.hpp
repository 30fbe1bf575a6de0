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

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckpoints/elliptic.hpp"
#include "ckpoints/integer.hpp"
#include "ckpoints/rational.hpp"

namespace ckp {

/// Projective point on C_k as a primitive integer triple. The last nonzero
/// coordinate is positive, so affine points have z > 0 and the two points at
/// infinity are (1 : 0 : 0) and (0 : 1 : 0).
class CPoint {
 public:
  CPoint(Integer x, Integer y, Integer z);
  static CPoint affine(const Rational& x, const Rational& y);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  const Integer& z() const { return z_; }
  bool at_infinity() const { return z_ == 0; }
  Rational affine_x() const;
  Rational affine_y() const;

  /// The image under (x : y : z) -> (y : x : z).
  CPoint swapped() const { return {y_, x_, z_}; }

  /// Affine points print with rational coordinates, e.g. (1/2 : -9/4 : 1).
  std::string str() const;

  friend bool operator==(const CPoint&, const CPoint&) = default;
  /// Points at infinity first, then affine points by (x, y).
  friend std::strong_ordering operator<=>(const CPoint& a, const CPoint& b);

 private:
  Integer x_, y_, z_;
};

inline std::ostream& operator<<(std::ostream& os, const CPoint& p) { return os << p.str(); }

/// C_k : x^3 z + x^2 y^2 + y^3 z = k z^4.
class QuarticCurve {
 public:
  /// DomainError for the singular members k = 0 and k = -27/16.
  explicit QuarticCurve(Rational k);

  const Rational& k() const { return k_; }
  bool contains(const CPoint& p) const;
  /// y^3 + x0^2 y^2 + x0^3 - k, the affine fiber over x = x0.
  QPoly fiber(const Rational& x0) const;

 private:
  Rational k_;
};

/// E_{1,k}: y^2 + 3xy = x^3 + k.
WeierstrassCurve e1_curve(const Rational& k);
/// E_{2,k}: y^2 = x^3 + 4k x^2 + 16k^2.
WeierstrassCurve e2_curve(const Rational& k);
/// E_{3,k}: y^2 = x^3 - 27x^2 - 1728k.
WeierstrassCurve e3_curve(const Rational& k);
/// E_{i,k} for i in 1..3.
WeierstrassCurve e_curve(int i, const Rational& k);

struct Family {
  QuarticCurve curve;
  WeierstrassCurve e1, e2, e3;

  const WeierstrassCurve& e(int i) const;
};

Family make_family(const Rational& k);

inline Rational scalar_like(long v, const Rational&) { return Rational(v); }

/// The affine formulas of phi_i at (x : y : 1) over any field with
/// scalar_like; nullopt when the image is the identity (phi_3 with x = y).
template <class F>
std::optional<std::pair<F, F>> phi_affine(int i, const F& k, const F& x, const F& y) {
  const auto c = [&](long v) { return scalar_like(v, x); };
  switch (i) {
    case 1:
      return std::pair<F, F>{-x - y, x * y};
    case 2: {
      const F x2 = x * x, x3 = x2 * x;
      return std::pair<F, F>{c(-4) * x3 - c(4) * x * y,
                             c(-8) * x3 * x * y + c(16) * x3 + c(8) * y * y * y - c(12) * k};
    }
    case 3: {
      const F d = x - y;
      if (d.is_zero()) return std::nullopt;
      const F x2 = x * x, y2 = y * y, x3 = x2 * x, y3 = y2 * y, x4 = x3 * x, y4 = y3 * y;
      const F a = c(16) * x2 * y2 + c(12) * (x3 + x2 * y + x * y2 + y3) + c(36) * (x2 - x * y + y2);
      const F b = c(72) * x4 * y + c(108) * x4 + c(64) * x3 * y3 + c(72) * x3 * y2 + c(108) * x3 +
                  c(72) * x2 * y3 + c(216) * x2 * y2 + c(72) * x * y4 + c(108) * y4 + c(108) * y3;
      const F d2 = d * d;
      return std::pair<F, F>{a / d2, b / (d2 * d)};
    }
    default:
      throw DomainError("quotient map index must be 1, 2 or 3");
  }
}

/// phi_i(P) on E_{i,k}. Both points at infinity map to the identity, as does
/// every point with x = y under phi_3. DomainError if P is not on C.
EPoint phi(int i, const QuarticCurve& c, const CPoint& p);

/// All rational points of C mapping to Q under phi_i, sorted.
/// DomainError if Q is not on E_{i,k}.
std::vector<CPoint> preimages(int i, const QuarticCurve& c, const EPoint& q);

struct GenericPoint {
  EPoint point;
  std::optional<unsigned> order;  // nullopt: infinite order
};

/// The point (0, 4k) on E_{2,k} and its order.
GenericPoint e2_generic_point(const Rational& k);

}  // namespace ckp
