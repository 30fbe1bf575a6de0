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

#include "ckpoints/classify.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ckpoints/cases.hpp"
#include "ckpoints/errors.hpp"
#include "ckpoints/search.hpp"

namespace ckp {

std::vector<RankFact> parse_rank_facts(std::istream& in, const std::string& name) {
  std::vector<RankFact> out;
  std::map<std::pair<Integer, int>, std::pair<unsigned, std::size_t>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string ks, is_, rs;
    if (!(is >> ks)) continue;
    const auto fail = [&](const std::string& msg) { throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg); };
    if (!(is >> is_ >> rs)) fail("expected 'k i rank source'");
    std::string source;
    std::getline(is >> std::ws, source);
    while (!source.empty() && std::isspace(static_cast<unsigned char>(source.back()))) source.pop_back();
    if (source.empty()) fail("missing source");

    RankFact f;
    if (f.k.set_str(ks, 10) != 0) fail("k is not an integer: '" + ks + "'");
    if (is_ != "1" && is_ != "2" && is_ != "3") fail("curve index must be 1, 2 or 3, got '" + is_ + "'");
    f.i = is_[0] - '0';
    if (rs.empty() || rs.size() > 3 || !std::all_of(rs.begin(), rs.end(), ::isdigit)) fail("bad rank '" + rs + "'");
    f.rank = static_cast<unsigned>(std::stoul(rs));
    f.source = source;
    if (f.k == 0) fail("k must be nonzero");

    const auto key = std::make_pair(f.k, f.i);
    if (const auto it = seen.find(key); it != seen.end()) {
      if (it->second.first != f.rank)
        fail("rank of E" + is_ + " at k = " + ks + " conflicts with line " + std::to_string(it->second.second));
      continue;
    }
    seen.emplace(key, std::make_pair(f.rank, lineno));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<RankFact> load_rank_facts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rank facts file '" + path + "'");
  return parse_rank_facts(in, path);
}

std::vector<RankFact> facts_for(const std::vector<RankFact>& facts, const Integer& k) {
  std::vector<RankFact> out;
  std::copy_if(facts.begin(), facts.end(), std::back_inserter(out), [&](const RankFact& f) { return f.k == k; });
  return out;
}

namespace {

Integer naive_height(const Rational& q) { return std::max(Integer(abs(q.num())), q.den()); }

std::vector<CPoint> infinite_points() {
  return {CPoint(Integer(1), Integer(0), Integer(0)), CPoint(Integer(0), Integer(1), Integer(0))};
}

}  // namespace

Refutation refute_rank_zero(const Integer& k, int i, long height) {
  if (k == 0) throw DomainError("k must be nonzero");
  const WeierstrassCurve e = e_curve(i, Rational(k));
  auto pts = search_e(e, height);
  std::stable_sort(pts.begin(), pts.end(), [](const EPoint& a, const EPoint& b) {
    const Integer ha = naive_height(a.x), hb = naive_height(b.x);
    if (ha != hb) return ha < hb;
    if (a.x != b.x) return a.x < b.x;
    return b.y < a.y;
  });
  Refutation r;
  r.height = height;
  for (const auto& p : pts) {
    if (has_infinite_order(e, p)) {
      r.refuted = true;
      r.witness = p;
      break;
    }
  }
  return r;
}

std::string to_string(ClassifyStatus s) {
  switch (s) {
    case ClassifyStatus::kClassified:
      return "classified";
    case ClassifyStatus::kNeedsRankFact:
      return "needs-rank-fact";
    case ClassifyStatus::kRankFactRefuted:
      return "rank-fact-refuted";
  }
  return "?";
}

int theorem_branch(const Integer& k) {
  if (k == -1) return 3;
  if (k == 135) return 4;
  return case1_roots(k).empty() ? 1 : 2;
}

std::vector<CPoint> theorem_points(const Integer& k) {
  std::vector<CPoint> out = infinite_points();
  const auto add = [&](long x, long y) { out.emplace_back(Integer(x), Integer(y), Integer(1)); };
  switch (theorem_branch(k)) {
    case 2:
      for (const auto& a : case1_roots(k)) out.emplace_back(a, a, Integer(1));
      break;
    case 3:
      add(-1, 0), add(0, -1), add(-1, -1);
      break;
    case 4:
      add(3, 3), add(-6, 3), add(3, -6);
      break;
    default:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassificationResult classify(const Integer& k, const std::vector<RankFact>& facts, long height) {
  if (k == 0) throw DomainError("classify needs k != 0");
  ClassificationResult r;
  r.k = k;
  r.height = height;
  r.case1 = case1_roots(k);
  const Family fam = make_family(Rational(k));

  const auto searched = search_ck(Rational(k), height);
  r.searched = searched.size();

  std::optional<std::vector<CPoint>> pinned;
  for (const auto& fact : facts_for(facts, k)) {
    if (fact.rank != 0) continue;
    const Refutation ref = refute_rank_zero(k, fact.i, height);
    if (ref.refuted) {
      r.refuted.emplace_back(fact, *ref.witness);
      continue;
    }
    CurveCertificate cert;
    cert.i = fact.i;
    cert.fact = fact;
    cert.torsion = torsion_subgroup(fam.e(fact.i));
    const auto inf = infinite_points();
    std::set<CPoint> pts(inf.begin(), inf.end());
    for (const auto& t : cert.torsion.points) {
      auto fiber = preimages(fact.i, fam.curve, t);
      pts.insert(fiber.begin(), fiber.end());
      cert.fibers.emplace_back(t, std::move(fiber));
    }
    std::vector<CPoint> set(pts.begin(), pts.end());
    if (pinned && *pinned != set)
      throw IntegrityError("rank-zero curves E" + std::to_string(r.curves.front().i) + " and E" +
                           std::to_string(fact.i) + " give different point sets at k = " + k.get_str());
    pinned = std::move(set);
    r.curves.push_back(std::move(cert));
  }

  if (!pinned) {
    r.status = r.refuted.empty() ? ClassifyStatus::kNeedsRankFact : ClassifyStatus::kRankFactRefuted;
    std::set<CPoint> known(searched.begin(), searched.end());
    const auto inf = infinite_points();
    known.insert(inf.begin(), inf.end());
    r.points.assign(known.begin(), known.end());
    return r;
  }
  for (const auto& p : searched) {
    if (!std::binary_search(pinned->begin(), pinned->end(), p))
      throw IntegrityError("bounded search found " + p.str() + " outside the classified set at k = " + k.get_str());
  }
  r.status = ClassifyStatus::kClassified;
  r.points = std::move(*pinned);
  r.branch = theorem_branch(k);
  return r;
}

SweepSummary sweep(long from, long to, const std::vector<RankFact>& facts, long height) {
  if (from > to) throw DomainError("empty sweep range");
  SweepSummary s;
  s.from = from;
  s.to = to;
  std::vector<long> ks;
  for (long k = from; k <= to; ++k) {
    if (k != 0) ks.push_back(k);
  }
  s.results.resize(ks.size());
  std::vector<std::exception_ptr> errors(ks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t j = 0; j < ks.size(); ++j) {
    try {
      s.results[j] = classify(Integer(ks[j]), facts, height);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  s.total = ks.size();
  for (const auto& r : s.results) {
    switch (r.status) {
      case ClassifyStatus::kClassified:
        ++s.classified;
        ++s.by_branch[r.branch];
        break;
      case ClassifyStatus::kNeedsRankFact:
        ++s.needs_fact;
        break;
      case ClassifyStatus::kRankFactRefuted:
        ++s.refuted;
        break;
    }
  }
  return s;
}

}  // namespace ckp
