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

#include <string>
#include <vector>

#include "ckpoints/elliptic.hpp"
#include "ckpoints/family.hpp"

namespace ckp {

/// Points of C_k with x = a/b, |a| <= H, 1 <= b <= H, plus the two points at
/// infinity. Complete for x-height <= H; y is found exactly, so its height is
/// unrestricted. Sorted. The production kernel runs the x-candidates in
/// parallel and solves the integral fiber cubic by monotone bisection.
std::vector<CPoint> search_ck(const Rational& k, long height);

/// Reference kernel: one thread, generic rational root finding per fiber.
std::vector<CPoint> search_ck_serial(const Rational& k, long height);

/// Affine points of E with x-height <= H, sorted.
std::vector<EPoint> search_e(const WeierstrassCurve& e, long height);
std::vector<EPoint> search_e_serial(const WeierstrassCurve& e, long height);

/// A point of y^2 = f(x). At infinity, y is the square root of the leading
/// coefficient of f homogenized to even degree.
struct HyperellipticPoint {
  bool at_infinity = false;
  Rational x, y;

  std::string str() const;
  friend bool operator==(const HyperellipticPoint&, const HyperellipticPoint&) = default;
};

bool operator<(const HyperellipticPoint& p, const HyperellipticPoint& q);

/// Points of y^2 = f(x) with x-height <= H and all points at infinity, sorted.
/// f is given lowest degree first.
std::vector<HyperellipticPoint> search_hyperelliptic(const std::vector<Integer>& f, long height);
std::vector<HyperellipticPoint> search_hyperelliptic_serial(const std::vector<Integer>& f, long height);

/// Integer roots of w^3 + c2 w^2 + c0 with c2 >= 0, ascending. Exposed for tests.
std::vector<Integer> integer_roots_depressed_cubic(const Integer& c2, const Integer& c0);

}  // namespace ckp
