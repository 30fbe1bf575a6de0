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


#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ckpoints/cases.hpp"
#include "ckpoints/classify.hpp"
#include "ckpoints/errors.hpp"
#include "ckpoints/family.hpp"
#include "ckpoints/ffcheck.hpp"
#include "ckpoints/localsolve.hpp"
#include "ckpoints/search.hpp"

namespace ckp::cli {

namespace {

using json = nlohmann::json;

const std::string kDataDir = CKPOINTS_DATA_DIR;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json certificates = json::array();
  std::vector<std::string> computed, imported;
  std::ostringstream text;
  bool ok = true;
};

Integer parse_integer(const std::string& s) {
  const Rational q = Rational::parse(s);
  if (!q.is_integer()) throw ParseError("expected an integer, got '" + s + "'");
  return q.num();
}

template <class T, class F>
json map_json(const std::vector<T>& v, F f) {
  json a = json::array();
  for (const auto& x : v) a.push_back(f(x));
  return a;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F f, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t n = 0; n < v.size(); ++n) s += (n ? sep : "") + f(v[n]);
  return v.empty() ? "none" : s;
}

std::string zstr(const Integer& z) { return z.get_str(); }
std::string qstr(const Rational& q) { return q.str(); }
std::string pstr(const CPoint& p) { return p.str(); }
std::string estr(const EPoint& p) { return to_string(p); }

json point_json(const CPoint& p) { return json::array({zstr(p.x()), zstr(p.y()), zstr(p.z())}); }
json epoint_json(const EPoint& p) {
  if (p.is_identity()) return "O";
  return json::array({qstr(p.x), qstr(p.y)});
}

json certificate_json(const CaseCertificate& c) {
  return {{"kind", c.kind}, {"summary", c.summary}, {"imported", c.imported}};
}

// classify

json classification_json(const ClassificationResult& r) {
  json refuted = json::array();
  for (const auto& [fact, w] : r.refuted) {
    refuted.push_back({{"curve", "E" + std::to_string(fact.i)}, {"source", fact.source}, {"witness", epoint_json(w)}});
  }
  return {{"k", zstr(r.k)},
          {"status", to_string(r.status)},
          {"branch", r.branch},
          {"points", map_json(r.points, point_json)},
          {"case1_roots", map_json(r.case1, zstr)},
          {"search_height", r.height},
          {"search_found", r.searched},
          {"refuted", refuted}};
}

void classify_cmd(Report& rep, const std::string& k_text, const std::string& ranks, long height) {
  const Integer k = parse_integer(k_text);
  rep.inputs = {{"k", zstr(k)}, {"ranks", ranks}, {"height", height}};
  const auto facts = load_rank_facts(ranks);
  const auto r = classify(k, facts, height);
  rep.results = classification_json(r);
  rep.ok = r.status == ClassifyStatus::kClassified;
  rep.computed = {"torsion subgroups", "torsion preimages", "bounded search"};

  auto& t = rep.text;
  t << "k = " << k << ": " << to_string(r.status);
  if (r.branch) t << " (branch " << r.branch << ")";
  t << "\n";
  for (const auto& c : r.curves) {
    json fibers = json::array();
    t << "E" << c.i << ": rank " << c.fact.rank << " [" << c.fact.source << "], torsion "
      << c.torsion.structure() << "\n";
    for (const auto& [q, pre] : c.fibers) {
      fibers.push_back({{"point", epoint_json(q)}, {"preimages", map_json(pre, point_json)}});
      t << "  " << estr(q) << " <- " << join(pre, pstr) << "\n";
    }
    rep.certificates.push_back({{"curve", "E" + std::to_string(c.i)},
                                {"rank", c.fact.rank},
                                {"rank_source", c.fact.source},
                                {"torsion", c.torsion.structure()},
                                {"fibers", fibers}});
    rep.imported.push_back("rank of E" + std::to_string(c.i) + " (" + c.fact.source + ")");
  }
  for (const auto& [fact, w] : r.refuted) {
    t << "E" << fact.i << ": rank 0 [" << fact.source << "] refuted by " << estr(w) << "\n";
  }
  if (!r.case1.empty()) t << "a with a^4 + 2a^3 = k: " << join(r.case1, zstr) << "\n";
  t << "points (" << r.points.size() << "): " << join(r.points, pstr) << "\n";
  t << "bounded search, height " << r.height << ": " << r.searched << " points\n";
}

// sweep

void sweep_cmd(Report& rep, long from, long to, const std::string& ranks, long height) {
  if (from > to) throw DomainError("empty range: --from is greater than --to");
  rep.inputs = {{"from", from}, {"to", to}, {"ranks", ranks}, {"height", height}};
  const auto facts = load_rank_facts(ranks);
  const auto s = sweep(from, to, facts, height);
  json rows = json::array();
  auto& t = rep.text;
  t << "      k  status            branch  points  via\n";
  for (const auto& r : s.results) {
    std::vector<int> via;
    for (const auto& c : r.curves) via.push_back(c.i);
    rows.push_back({{"k", zstr(r.k)},
                    {"status", to_string(r.status)},
                    {"branch", r.branch},
                    {"points", r.points.size()},
                    {"curves", via}});
    char line[128];
    std::snprintf(line, sizeof line, "%7s  %-16s  %6d  %6zu  %s\n", zstr(r.k).c_str(), to_string(r.status).c_str(),
                  r.branch, r.points.size(), join(via, [](int i) { return "E" + std::to_string(i); }).c_str());
    t << line;
  }
  json branches = json::object();
  for (int b = 1; b <= 4; ++b) branches[std::to_string(b)] = s.by_branch[b];
  rep.results = {{"rows", rows},
                 {"total", s.total},
                 {"classified", s.classified},
                 {"needs_rank_fact", s.needs_fact},
                 {"rank_fact_refuted", s.refuted},
                 {"by_branch", branches}};
  rep.computed = {"torsion subgroups", "torsion preimages", "bounded search"};
  rep.imported = {"rank facts (" + ranks + ")"};
  t << "classified " << s.classified << " of " << s.total << " nonzero k via a rank-zero curve"
    << " (branch 1: " << s.by_branch[1] << ", 2: " << s.by_branch[2] << ", 3: " << s.by_branch[3]
    << ", 4: " << s.by_branch[4] << "); needs rank fact: " << s.needs_fact << "; refuted: " << s.refuted << "\n";
}

// case

void case_cmd(Report& rep, int n) {
  rep.inputs = {{"n", n}};
  json reports = json::array();
  auto& t = rep.text;
  for (const auto& r : case_reports(n)) {
    json local = nullptr;
    if (r.local) {
      local = {{"status", to_string(r.local->status)}, {"depth", r.local->depth_used}};
    }
    reports.push_back({{"case", r.case_id},
                       {"target", r.target},
                       {"integral_k", map_json(r.integral_k, zstr)},
                       {"rational_extras", map_json(r.rational_extras, qstr)},
                       {"m_values", map_json(r.m_values, zstr)},
                       {"local", local},
                       {"uses_imported_facts", r.uses_imported_facts()}});
    for (const auto& c : r.certificates) {
      json cj = certificate_json(c);
      cj["case"] = r.case_id;
      cj["target"] = r.target;
      rep.certificates.push_back(cj);
      (c.imported ? rep.imported : rep.computed).push_back(c.kind);
    }
    t << "case " << r.case_id << " (" << r.target << ")\n";
    t << "  integral k: " << join(r.integral_k, zstr) << "\n";
    if (!r.rational_extras.empty()) t << "  rational k: " << join(r.rational_extras, qstr) << "\n";
    if (!r.m_values.empty()) t << "  16k^2 + 27k: " << join(r.m_values, zstr) << "\n";
    if (r.local) t << "  local: " << to_string(r.local->status) << " (depth " << r.local->depth_used << ")\n";
    for (const auto& c : r.certificates) {
      t << "  - " << c.kind << (c.imported ? " [imported]" : "") << ": " << c.summary << "\n";
    }
  }
  rep.results = {{"reports", reports}};
}

// search

void search_cmd(Report& rep, const std::string& k_text, long height) {
  const Rational k = Rational::parse(k_text);
  rep.inputs = {{"k", qstr(k)}, {"height", height}};
  const auto pts = search_ck(k, height);
  rep.results = {{"points", map_json(pts, point_json)}, {"count", pts.size()}};
  rep.computed = {"bounded search"};
  rep.text << "C_" << k << ", height " << height << ": " << pts.size() << " points\n";
  for (const auto& p : pts) rep.text << "  " << p << "\n";
}

// torsion

void torsion_cmd(Report& rep, const std::string& curve, const std::string& k_text) {
  const Rational k = Rational::parse(k_text);
  if (curve.size() != 2 || curve[0] != 'e' || curve[1] < '1' || curve[1] > '3') {
    throw DomainError("curve must be e1, e2 or e3");
  }
  const int i = curve[1] - '0';
  rep.inputs = {{"curve", curve}, {"k", qstr(k)}};
  const auto e = e_curve(i, k);
  const auto g = torsion_subgroup(e);
  json pts = json::array();
  rep.text << "E" << i << "," << k << ": " << to_string(e) << "\n";
  rep.text << "torsion " << g.structure() << "\n";
  for (const auto& p : g.points) {
    const unsigned ord = small_order(e, p).value_or(0);
    pts.push_back({{"point", epoint_json(p)}, {"order", ord}});
    rep.text << "  " << estr(p) << "  order " << ord << "\n";
  }
  rep.results = {{"model", to_string(e)}, {"structure", g.structure()}, {"invariants", g.invariants}, {"points", pts}};
  rep.computed = {"torsion subgroup"};
}

// localsolve

void localsolve_cmd(Report& rep, const std::string& c_text, unsigned e, const std::string& f_text,
                    const std::string& p_text, unsigned depth) {
  std::vector<Rational> coeffs;
  std::stringstream ss(f_text);
  for (std::string item; std::getline(ss, item, ',');) coeffs.push_back(Rational(parse_integer(item)));
  std::reverse(coeffs.begin(), coeffs.end());
  const SuperellipticModel model{parse_integer(c_text), e, QPoly(coeffs)};
  const Integer p = parse_integer(p_text);
  rep.inputs = {{"c", zstr(model.c)}, {"e", e}, {"f", f_text}, {"p", zstr(p)}, {"depth", depth}};
  const auto v = qp_soluble(model, p, depth);
  json witness = nullptr;
  rep.text << model.str() << " over Q_" << p << ": " << to_string(v.status) << " (depth " << v.depth_used << ")\n";
  if (v.witness) {
    const auto& w = *v.witness;
    witness = {{"at_infinity", w.at_infinity}, {"t", zstr(w.t)}, {"y", qstr(w.y)}, {"precision", w.precision}};
    rep.text << "  witness " << (w.at_infinity ? "u" : "t") << " = " << w.t << ", y = " << w.y << " mod " << p << "^"
             << w.precision << "\n";
  }
  rep.results = {{"model", model.str()}, {"status", to_string(v.status)}, {"depth_used", v.depth_used}, {"witness", witness}};
  rep.computed = {"local solubility"};
  rep.ok = v.status != LocalStatus::kUnknown;
}

// ffcheck

void ffcheck_cmd(Report& rep, const std::string& k_text, std::uint64_t pmax, bool fibers) {
  const Integer k = parse_integer(k_text);
  if (pmax >= kMaxCountPrime) throw DomainError("--pmax must be below " + std::to_string(kMaxCountPrime));
  rep.inputs = {{"k", zstr(k)}, {"pmax", pmax}, {"fibers", fibers}};
  json rows = json::array(), skipped = json::array();
  auto& t = rep.text;
  t << "    p      #C      a1      a2      a3  identity" << (fibers ? "  max fibers" : "") << "\n";
  std::size_t failures = 0;
  for (std::uint64_t p = 5; p <= pmax; ++p) {
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
    try {
      check_good_prime(k, p);
    } catch (const DomainError& e) {
      skipped.push_back({{"p", p}, {"reason", e.what()}});
      continue;
    }
    const auto r = count_curve_points(k, p);
    failures += !r.identity_holds;
    json row = {{"p", p}, {"countC", r.countC}, {"a1", r.a1}, {"a2", r.a2}, {"a3", r.a3}, {"identity_holds", r.identity_holds}};
    char line[128];
    std::snprintf(line, sizeof line, "%5lu  %6lu  %6ld  %6ld  %6ld  %s", static_cast<unsigned long>(p),
                  static_cast<unsigned long>(r.countC), r.a1, r.a2, r.a3, r.identity_holds ? "holds" : "FAILS");
    t << line;
    if (fibers) {
      json mx = json::array();
      for (int i = 1; i <= 3; ++i) {
        const auto s = fiber_stats(i, k, p);
        mx.push_back(s.max_fiber());
        t << (i == 1 ? "    " : " ") << s.max_fiber() << "/" << phi_degree(i);
      }
      row["max_fibers"] = mx;
    }
    t << "\n";
    rows.push_back(row);
  }
  for (const auto& s : skipped) t << "skipped " << s["reason"].get<std::string>() << "\n";
  rep.results = {{"primes", rows}, {"skipped", skipped}, {"failures", failures}};
  rep.computed = {"point counts"};
  rep.ok = failures == 0;
  t << (failures ? std::to_string(failures) + " primes fail the trace identity\n"
                 : "trace identity holds at all " + std::to_string(rows.size()) + " good primes\n");
}

// param

void param_cmd(Report& rep, const std::string& family, const std::string& arg) {
  const ParamFamily f = parse_param_family(family);
  ParamResult r = [&] {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) return param_k(f, Rational::parse(arg));
    return param_k(f, Rational::parse(arg.substr(0, comma)), Rational::parse(arg.substr(comma + 1)));
  }();
  rep.inputs = {{"family", to_string(f)}, {"arg", arg}};
  json witnesses = json::array();
  auto& t = rep.text;
  t << to_string(f) << " at " << arg << ": k = " << r.k << ", order " << r.order << "\n";
  for (const auto& [i, p] : r.witnesses) {
    witnesses.push_back({{"curve", "E" + std::to_string(i)}, {"point", epoint_json(p)}});
    t << "  E" << i << ": " << estr(p) << " has order " << r.order << "\n";
  }
  if (r.point) t << "  C_k point " << *r.point << "\n";
  t << "  " << r.certificate << "\n";
  rep.results = {{"k", qstr(r.k)},
                 {"order", r.order},
                 {"witnesses", witnesses},
                 {"point", r.point ? point_json(*r.point) : json(nullptr)}};
  rep.certificates.push_back({{"kind", "witness order"}, {"summary", r.certificate}, {"imported", false}});
  rep.computed = {"witness order"};
}

void emit(const Report& rep, bool as_json, std::optional<long long> elapsed_ms, std::ostream& out) {
  if (!as_json) {
    out << rep.text.str();
    if (elapsed_ms) out << "elapsed " << *elapsed_ms << " ms\n";
    return;
  }
  json j = {{"schema", kSchema},
            {"version", kVersion},
            {"command", rep.command},
            {"inputs", rep.inputs},
            {"results", rep.results},
            {"certificates", rep.certificates},
            {"ok", rep.ok},
            {"provenance", {{"computed", rep.computed}, {"imported", rep.imported}}}};
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  out << j.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational points on x^3 z + x^2 y^2 + y^3 z = k z^4", "ckpoints"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "JSON report instead of text");
  app.add_flag("--timing", timing, "add wall-clock time to the report");
  app.set_version_flag("--version", kVersion);

  Report rep;
  std::function<void()> action;

  std::string k_text, ranks, curve, f_text, c_text, p_text, family, arg;
  long height = kDefaultClassifyHeight, from = 0, to = 0;
  int n = 0;
  unsigned e = 2, depth = kDefaultLocalDepth;
  std::uint64_t pmax = 50;
  bool fibers = false;

  auto* cl = app.add_subcommand("classify", "C_k(Q) from rank-zero facts");
  cl->add_option("--k", k_text, "nonzero integer")->required();
  cl->add_option("--ranks", ranks, "rank-facts TSV")->default_str(kDataDir + "/rank_facts.tsv");
  cl->add_option("--height", height, "search height")->capture_default_str();
  cl->callback([&] { action = [&] { classify_cmd(rep, k_text, ranks.empty() ? kDataDir + "/rank_facts.tsv" : ranks, height); }; });

  auto* sw = app.add_subcommand("sweep", "classify every nonzero k in a range");
  sw->add_option("--from", from)->required();
  sw->add_option("--to", to)->required();
  sw->add_option("--ranks", ranks, "rank-facts TSV")->default_str(kDataDir + "/rank_facts_extended.tsv");
  sw->add_option("--height", height, "search height")->capture_default_str();
  sw->callback([&] { action = [&] { sweep_cmd(rep, from, to, ranks.empty() ? kDataDir + "/rank_facts_extended.tsv" : ranks, height); }; });

  auto* cs = app.add_subcommand("case", "run a case pipeline");
  cs->add_option("--n", n, "case number")->required()->check(CLI::Range(1, 6));
  cs->callback([&] { action = [&] { case_cmd(rep, n); }; });

  auto* se = app.add_subcommand("search", "points of C_k up to a height");
  se->add_option("--k", k_text, "rational k")->required();
  se->add_option("--height", height)->required()->check(CLI::PositiveNumber);
  se->callback([&] { action = [&] { search_cmd(rep, k_text, height); }; });

  auto* to_cmd = app.add_subcommand("torsion", "torsion subgroup of E_{i,k}");
  to_cmd->add_option("--curve", curve, "e1, e2 or e3")->required()->check(CLI::IsMember({"e1", "e2", "e3"}));
  to_cmd->add_option("--k", k_text, "rational k")->required();
  to_cmd->callback([&] { action = [&] { torsion_cmd(rep, curve, k_text); }; });

  auto* ls = app.add_subcommand("localsolve", "Q_p points on c y^e = f(t)");
  ls->add_option("--c", c_text)->required();
  ls->add_option("--e", e)->required()->check(CLI::IsMember({2, 4}));
  ls->add_option("--f", f_text, "integer coefficients, highest degree first, comma separated")->required();
  ls->add_option("--p", p_text)->required();
  ls->add_option("--depth", depth)->capture_default_str();
  ls->callback([&] { action = [&] { localsolve_cmd(rep, c_text, e, f_text, p_text, depth); }; });

  auto* ff = app.add_subcommand("ffcheck", "point counts and the trace identity over F_p");
  ff->add_option("--k", k_text)->required();
  ff->add_option("--pmax", pmax)->required();
  ff->add_flag("--fibers", fibers, "also report the largest fiber of each map");
  ff->callback([&] { action = [&] { ffcheck_cmd(rep, k_text, pmax, fibers); }; });

  auto* pa = app.add_subcommand("param", "k for a member of a torsion family");
  pa->add_option("--family", family)->required()->check(CLI::IsMember({"c12", "d12", "d13", "d33", "d14"}));
  pa->add_option("--arg", arg, "rational, or x,y for d14")->required();
  pa->callback([&] { action = [&] { param_cmd(rep, family, arg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }
  rep.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const std::exception& ex) {
    err << "ckpoints " << rep.command << ": " << ex.what() << "\n";
    return 1;
  }
  std::optional<long long> elapsed;
  if (timing) {
    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  emit(rep, as_json, elapsed, out);
  return rep.ok ? 0 : 1;
}

}  // namespace ckp::cli
