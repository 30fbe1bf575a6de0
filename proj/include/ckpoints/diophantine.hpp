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
#include <utility>
#include <vector>

#include "ckpoints/integer.hpp"
#include "ckpoints/polynomial.hpp"
#include "ckpoints/rational.hpp"

namespace ckp {

/// Default box for bounded Thue searches.
inline constexpr long kDefaultThueBox = 10000;

/// Homogeneous binary form F(u, v) = sum c_i u^i v^(n-i), degree n >= 3.
class ThueForm {
 public:
  /// coeffs[i] multiplies u^i v^(n-i). DomainError for degree < 3 or F = 0.
  explicit ThueForm(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer operator()(const Integer& u, const Integer& v) const;
  /// The same form with u and v exchanged.
  ThueForm swapped() const;
  std::string str() const;

 private:
  std::vector<Integer> c_;
};

using IntPair = std::pair<long, long>;

/// All (u, v) with |u|, |v| <= B and F(u, v) = m, sorted. For each v the
/// candidates for u are confined to discs around Re(alpha) v for the complex
/// roots alpha of F(x, 1), then checked exactly.
std::vector<IntPair> thue_bounded(const ThueForm& f, const Integer& m, long box = kDefaultThueBox);

/// Reference: checks every pair in the box.
std::vector<IntPair> thue_bounded_serial(const ThueForm& f, const Integer& m, long box);

/// F phi + G psi = 1 with R = A a0^(deg phi + deg psi), where A is the lcm of
/// the denominators of F and G and a0 the leading coefficient of phi. For
/// coprime (m, n), gcd(n^d phi(m/n), n^d psi(m/n)) divides R.
struct GcdBoundCertificate {
  QPoly phi, psi;
  QPoly f, g;
  Integer a;
  Integer a0;
  Integer r;
};

/// DomainError unless phi, psi have integer coefficients and no common root.
GcdBoundCertificate gcd_bound(const QPoly& phi, const QPoly& psi);

/// gcd(n^d phi(m/n), n^d psi(m/n)) with d the larger degree.
Integer homogenized_gcd(const QPoly& phi, const QPoly& psi, const Integer& m, const Integer& n);

struct Case3Solution {
  long u = 0, v = 0;
  Integer d;   // (u + v)^3 (u - 3v)
  Integer d1;  // (u + v)^3
  Rational k;  // u^3 (-2u - 3v) / d
};

/// Solves (u + v)^3 (u - 3v) = d over the signed divisors d of `bound`,
/// splitting d = d1 * (d / d1) with d1 a signed cube; keeps gcd(u, v) = 1.
std::vector<Case3Solution> case3_divisor_solve(const Integer& bound = Integer(243));

/// (a, b) with a^2 - 3b^2 = c and |a|, |b| <= B, sorted.
std::vector<IntPair> pell_bounded(long c, long box);

/// Rational roots of 16k^2 + 27k - m.
std::vector<Rational> k_from_16k2_27k(const Integer& m);

}  // namespace ckp
