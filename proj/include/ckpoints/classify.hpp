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

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ckpoints/elliptic.hpp"
#include "ckpoints/family.hpp"

namespace ckp {

inline constexpr long kDefaultClassifyHeight = 100;

struct RankFact {
  Integer k;
  int i = 1;
  unsigned rank = 0;
  std::string source;

  friend bool operator==(const RankFact&, const RankFact&) = default;
};

/// Tab- or space-separated "k i rank source" lines; '#' starts a comment.
/// ParseError names the line of the first malformed or conflicting entry.
std::vector<RankFact> parse_rank_facts(std::istream& in, const std::string& name = "<input>");
std::vector<RankFact> load_rank_facts(const std::string& path);

/// Rank facts for one k, in file order.
std::vector<RankFact> facts_for(const std::vector<RankFact>& facts, const Integer& k);

struct Refutation {
  bool refuted = false;
  std::optional<EPoint> witness;  // a point of infinite order
  long height = 0;
};

/// Looks for a point of infinite order on E_{i,k} with x-height <= H,
/// smallest height first. Not refuted is no proof of rank zero.
Refutation refute_rank_zero(const Integer& k, int i, long height);

enum class ClassifyStatus { kClassified, kNeedsRankFact, kRankFactRefuted };
std::string to_string(ClassifyStatus s);

/// One rank-zero curve used to pin down C_k(Q).
struct CurveCertificate {
  int i = 0;
  RankFact fact;
  TorsionGroup torsion;
  std::vector<std::pair<EPoint, std::vector<CPoint>>> fibers;  // torsion point, its preimages
};

struct ClassificationResult {
  Integer k;
  ClassifyStatus status = ClassifyStatus::kNeedsRankFact;
  int branch = 0;  // 1-4 when classified
  std::vector<CPoint> points;
  std::vector<CurveCertificate> curves;
  std::vector<std::pair<RankFact, EPoint>> refuted;
  std::vector<Integer> case1;
  long height = kDefaultClassifyHeight;
  std::size_t searched = 0;  // points found by the bounded search
};

/// The points the theorem predicts for a branch (1 generic, 2 k = a^4 + 2a^3,
/// 3 k = -1, 4 k = 135).
int theorem_branch(const Integer& k);
std::vector<CPoint> theorem_points(const Integer& k);

/// C_k(Q) from a rank-zero fact: preimages of the torsion of each trusted
/// rank-zero curve, intersected across curves and checked against a bounded
/// search. DomainError for k = 0; IntegrityError if two curves or the search
/// disagree.
ClassificationResult classify(const Integer& k, const std::vector<RankFact>& facts,
                              long height = kDefaultClassifyHeight);

struct SweepSummary {
  long from = 0, to = 0;
  std::size_t total = 0, classified = 0, needs_fact = 0, refuted = 0;
  std::size_t by_branch[5] = {0, 0, 0, 0, 0};
  std::vector<ClassificationResult> results;  // ascending k
};

/// classify over every nonzero k in [from, to], in parallel per k.
SweepSummary sweep(long from, long to, const std::vector<RankFact>& facts, long height = kDefaultClassifyHeight);

}  // namespace ckp
