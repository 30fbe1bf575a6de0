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

#include <cstdint>
#include <map>
#include <string>

#include "ckpoints/integer.hpp"

namespace ckp {

struct TraceReport {
  Integer k;
  std::uint64_t p = 0;
  std::uint64_t countC = 0;  // projective points of C_k over F_p
  long a1 = 0, a2 = 0, a3 = 0;
  bool identity_holds = false;

  long a(int i) const { return i == 1 ? a1 : i == 2 ? a2 : a3; }
};

inline constexpr std::uint64_t kMaxCountPrime = 1u << 15;

/// DomainError unless p is a prime of good reduction for C_k and all three
/// E_{i,k}: p > 3, p below kMaxCountPrime, p not dividing k (16k + 27) or any
/// of the three discriminant numerators. The message names the failing test.
void check_good_prime(const Integer& k, std::uint64_t p);

/// Brute-force counts of C_k and E_{i,k} over F_p, with
/// a_i = p + 1 - #E_{i,k}(F_p) and the test #C_k = p + 1 - a1 - a2 - a3.
TraceReport count_curve_points(const Integer& k, std::uint64_t p);
TraceReport count_curve_points_serial(const Integer& k, std::uint64_t p);

/// Affine points of C_k over F_p, both loops exhaustive.
std::uint64_t count_affine_quartic(const Integer& k, std::uint64_t p);
std::uint64_t count_affine_quartic_serial(const Integer& k, std::uint64_t p);

/// #E_{i,k}(F_p), the identity included.
std::uint64_t count_e_points(int i, const Integer& k, std::uint64_t p);

struct FiberStats {
  int i = 0;
  Integer k;
  std::uint64_t p = 0;
  std::uint64_t image_points = 0;  // #E_{i,k}(F_p)
  std::uint64_t source_points = 0;  // #C_k(F_p)
  std::map<unsigned, std::uint64_t> histogram;  // fiber size -> number of points of E_{i,k}(F_p)
  unsigned max_fiber() const { return histogram.empty() ? 0 : histogram.rbegin()->first; }
};

/// Degree of phi_i: 2, 3, 6.
unsigned phi_degree(int i);

/// Sizes of the fibers of phi_i : C_k(F_p) -> E_{i,k}(F_p) over every point
/// of E_{i,k}(F_p). IntegrityError if an image lands off the curve.
FiberStats fiber_stats(int i, const Integer& k, std::uint64_t p);

}  // namespace ckp
