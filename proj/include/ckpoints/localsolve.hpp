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

#include <optional>
#include <string>

#include "ckpoints/integer.hpp"
#include "ckpoints/polynomial.hpp"
#include "ckpoints/rational.hpp"

namespace ckp {

/// c y^e = f(t) with integer c != 0, e in {2, 4}, f integer and nonzero.
struct SuperellipticModel {
  Integer c;
  unsigned e = 2;
  QPoly f;

  /// DomainError if the invariants fail.
  void validate() const;
  std::string str() const;
};

enum class LocalStatus { kSoluble, kInsoluble, kUnknown };

std::string to_string(LocalStatus s);

/// A solution of c y^e = f(t) modulo p^precision, in the coordinates of the
/// patch it was found on (t itself, or u = 1/t with y rescaled by u^N).
struct LocalWitness {
  bool at_infinity = false;
  Integer t;
  Rational y;  // may carry p in the denominator
  unsigned precision = 0;
};

struct LocalVerdict {
  LocalStatus status = LocalStatus::kUnknown;
  std::optional<LocalWitness> witness;
  unsigned depth_used = 0;
};

inline constexpr unsigned kDefaultLocalDepth = 40;

/// Decides whether c y^e = f(t) has a point over Q_p by refining residue
/// classes t = a + p^r s on the affine patch (t in Z_p) and on the patch at
/// infinity (t = 1/u, y = w / u^N with N = ceil(deg f / e), u in p Z_p).
/// A class is settled once f(a + p^r s) / c has constant valuation and a unit
/// part fixed modulo p^(2 v_p(e) + 1); a simple root of f found by Hensel's
/// criterion also settles solubility. Unknown when depth_cap is reached.
/// DomainError for non-prime p or an invalid model.
LocalVerdict qp_soluble(const SuperellipticModel& model, const Integer& p,
                        unsigned depth_cap = kDefaultLocalDepth);

}  // namespace ckp
