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
#include <utility>
#include <vector>

#include "ckpoints/elliptic.hpp"
#include "ckpoints/family.hpp"
#include "ckpoints/localsolve.hpp"
#include "ckpoints/rational_function.hpp"

namespace ckp {

/// j-invariants of curves with a rational point of order i, 2 <= i <= 7.
RationalFunction jfamily(int i);

/// DomainError for i outside 2..7 or at a pole.
Rational jfamily_eval(int i, const Rational& t);

/// Integers a with a^4 + 2a^3 = k, ascending.
std::vector<Integer> case1_roots(const Integer& k);

/// One step of a case pipeline. Imported steps restate results that were
/// obtained elsewhere and are only cross-checked here.
struct CaseCertificate {
  std::string kind;
  std::string summary;
  bool imported = false;
};

struct CaseReport {
  int case_id = 0;
  std::string target;                  // "E1", "E3" or "E1, E3"
  std::vector<Integer> integral_k;     // every integral k reached, 0 included, ascending
  std::vector<Rational> rational_extras;
  std::vector<Integer> m_values;       // values of 16k^2 + 27k (Case 5)
  std::optional<LocalVerdict> local;   // Case 6
  std::vector<CaseCertificate> certificates;

  bool uses_imported_facts() const;
};

CaseReport case1_report();
CaseReport case2_e1();
CaseReport case2_e3();
CaseReport case3();
CaseReport case4();
CaseReport case5();
CaseReport case6();

/// The reports for case n (two for case 2). DomainError unless 1 <= n <= 6.
std::vector<CaseReport> case_reports(int n);

/// k(t) = (-(27/16) t^6 + (243/16) t^4) / (t^2 - 3)^3.
Rational case4_k(const Rational& t);

enum class ParamFamily { kC12, kD12, kD13, kD33, kD14 };

/// "c12", "d12", ... DomainError otherwise.
ParamFamily parse_param_family(const std::string& name);
std::string to_string(ParamFamily f);

struct ParamResult {
  ParamFamily family;
  Rational k;
  unsigned order = 0;
  std::vector<std::pair<int, EPoint>> witnesses;  // (i, P) with P on E_{i,k} of exactly that order
  std::optional<CPoint> point;      // C12: the point on C_k
  std::string certificate;
};

/// k for a member of a torsion family, with a verified witness. For D14 the
/// argument is a point (x, y) on y^2 = x^3 - 12x; other families take one
/// rational. DomainError at poles, off-curve points and the singular values
/// k = 0, -27/16; IntegrityError if the witness fails to verify.
ParamResult param_k(ParamFamily family, const Rational& a, const std::optional<Rational>& y = std::nullopt);

struct StoredModel {
  std::string name;   // "D35", "C13", ...
  std::string description;
  std::optional<SuperellipticModel> model;
  std::optional<WeierstrassCurve> curve;
  std::optional<unsigned> insoluble_at;  // prime with no local points
  std::string status;
  bool imported = false;
};

std::vector<StoredModel> stored_models();

}  // namespace ckp
