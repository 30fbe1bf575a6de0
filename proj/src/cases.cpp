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

#include "ckpoints/cases.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ckpoints/diophantine.hpp"
#include "ckpoints/errors.hpp"
#include "ckpoints/search.hpp"

namespace ckp {

namespace {

QPoly linear(const Rational& c0) { return QPoly({c0, Rational(1)}); }  // t + c0

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QPoly from_ints(const std::vector<Integer>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(std::move(v));
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

template <class T>
std::string set_str(const std::vector<T>& v) {
  return "{" + join(v) + "}";
}

bool has_order(const TorsionGroup& g, unsigned n) {
  return !g.invariants.empty() && g.invariants.back() % n == 0;
}

std::string torsion_line(const Rational& k) {
  const Family f = make_family(k);
  return "E1 " + torsion_subgroup(f.e1).structure() + ", E2 " + torsion_subgroup(f.e2).structure() + ", E3 " +
         torsion_subgroup(f.e3).structure();
}

bool singular_k(const Rational& k) { return k == 0 || k == Rational(Integer(-27), Integer(16)); }

Rational ck_value(const Rational& x, const Rational& y) { return x * x * x + x * x * y * y + y * y * y; }

void finalize(CaseReport& r, const std::set<Rational>& ks) {
  for (const auto& k : ks) {
    if (k.is_integer()) {
      r.integral_k.push_back(k.num());
    } else {
      r.rational_extras.push_back(k);
    }
  }
}

}  // namespace

RationalFunction jfamily(int i) {
  const QPoly t = linear(Rational(0));
  switch (i) {
    case 2:
      return RF(pow(t, 3u), linear(Rational(16)));
    case 3:
      return RF(pow(t, 3u) * linear(Rational(24)), linear(Rational(-3)));
    case 4: {
      const Rational sixteenth{Integer(1), Integer(16)};
      const QPoly q({sixteenth, Rational(-1), Rational(1)});
      return RF(QPoly::constant(Rational(-256)) * pow(q, 3u), pow(t, 4u) * linear(-sixteenth));
    }
    case 5:
      return RF(-pow(qpoly({1, -12, 14, 12, 1}), 3u), pow(t, 5u) * qpoly({-1, 11, 1}));
    case 6:
      return RF(pow(t, 3u) * pow(qpoly({-48, -24, 0, 1}), 3u),
                linear(Rational(-6)) * pow(linear(Rational(3)), 2u) * pow(linear(Rational(2)), 3u));
    case 7:
      return RF(pow(qpoly({1, 1, 1}), 3u) * pow(qpoly({1, 11, 30, 15, -10, -5, 1}), 3u),
                pow(t, 7u) * pow(linear(Rational(1)), 7u) * qpoly({-1, -8, -5, 1}));
    default:
      throw DomainError("j-family index must be between 2 and 7");
  }
}

Rational jfamily_eval(int i, const Rational& t) { return jfamily(i).evaluate(t); }

std::vector<Integer> case1_roots(const Integer& k) {
  const QPoly p({Rational(-k), Rational(0), Rational(0), Rational(2), Rational(1)});
  std::vector<Integer> out;
  for (const auto& r : rational_roots(p)) {
    if (r.is_integer()) out.push_back(r.num());
  }
  return out;
}

bool CaseReport::uses_imported_facts() const {
  return std::any_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.imported; });
}

CaseReport case1_report() {
  CaseReport r;
  r.case_id = 1;
  r.target = "E3";
  // phi_3 has last coordinate (x - y)^3, so O is hit exactly on the diagonal.
  std::vector<std::string> sample;
  for (long a = -6; a <= 6; ++a) {
    const Integer k = Integer(a) * a * a * (a + 2);
    if (k == 0) continue;
    const QuarticCurve c{Rational(k)};
    const CPoint p = CPoint::affine(Rational(a), Rational(a));
    if (!c.contains(p) || !phi(3, c, p).is_identity()) throw IntegrityError("diagonal point does not map to O");
    sample.push_back(std::to_string(a) + " -> " + k.get_str());
  }
  r.certificates.push_back({"identity-fiber",
                            "phi_3(x : y : 1) = O iff x = y, so x^4 + 2x^3 = k; checked for a in [-6, 6]: " +
                                join(sample)});
  r.certificates.push_back({"identity-fiber", "phi_1(x : y : 1) = (-x - y, xy) is never O"});
  return r;
}

CaseReport case2_e1() {
  CaseReport r;
  r.case_id = 2;
  r.target = "E1";
  std::set<Rational> ks;
  for (long b : {1L, 2L, 4L, 8L}) {
    const Integer B(b);
    const Integer bound = b == 1 ? Integer(729) : Integer(729) * B * B * B / 8;
    std::vector<std::string> hits;
    unsigned candidates = 0;
    for (const auto& pd : divisors(bound)) {
      for (int sd : {-1, 1}) {
        const Integer d = sd * pd, twice_a = d + 3 * B;
        if (twice_a % 2 != 0) continue;
        const Integer a = twice_a / 2;
        if (std::gcd(a.get_si(), b) != 1) continue;
        ++candidates;
        const Rational y{a, B};
        const Rational x = Rational(3) * y / (Rational(2) * y - Rational(3));
        const Rational k = ck_value(x, y);
        if (!k.is_integer()) continue;
        ks.insert(k);
        hits.push_back("y = " + y.str() + " -> " + k.str());
        if (k == 0) continue;
        const QuarticCurve c(k);
        const EPoint q = phi(1, c, CPoint::affine(x, y));
        if (small_order(e1_curve(k), q) != 2u) throw IntegrityError("Case 2 point is not 2-torsion on E1");
      }
    }
    r.certificates.push_back(
        {"divisor-system", "b = " + std::to_string(b) + ": 2a - 3b | " + bound.get_str() + ", " +
                               std::to_string(candidates) + " coprime candidates, integral k at " + join(hits)});
  }
  finalize(r, ks);
  return r;
}

CaseReport case2_e3() {
  CaseReport r;
  r.case_id = 2;
  r.target = "E3";
  const std::vector<Integer> sextic = ints({1, 6, 39, 52, 39, 6, 1});
  r.certificates.push_back({"imported",
                            "y^2 = x^6 + 6x^5 + 39x^4 + 52x^3 + 39x^2 + 6x + 1 has exactly 12 rational points "
                            "(quadratic Chabauty); they lie over k = 0, infinity, -1, 135",
                            true});

  const auto pts = search_hyperelliptic(sextic, 1000);
  if (pts.size() != 12) throw IntegrityError("bounded search on the genus 2 sextic disagrees with 12 points");
  std::vector<std::string> shown;
  for (const auto& p : pts) shown.push_back(p.str());
  r.certificates.push_back({"bounded-search", "x-height <= 1000 on the sextic finds 12 points: " + join(shown)});

  // The y-numerator of phi_3 as a quartic in y over Q[x]; its rational points
  // carry k = x^3 + x^2 y^2 + y^3.
  std::set<Rational> found;
  const long h = 30;
  for (long b = 1; b <= h; ++b) {
    for (long a = -h; a <= h; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x{Integer(a), Integer(b)};
      const Rational x2 = x * x, x3 = x2 * x, x4 = x3 * x;
      const QPoly fiber({Rational(108) * (x4 + x3), Rational(72) * x4, Rational(72) * x3 + Rational(216) * x2,
                         Rational(64) * x3 + Rational(72) * x2 + Rational(108), Rational(72) * x + Rational(108)});
      if (fiber.is_zero()) continue;
      for (const auto& y : rational_roots(fiber)) {
        if (y != x) found.insert(ck_value(x, y));
      }
    }
  }
  r.certificates.push_back({"bounded-search", "rational points of the order-2 locus with x-height <= 30 give k in " +
                                                  set_str(std::vector<Rational>(found.begin(), found.end()))});

  std::set<Rational> ks{Rational(0)};
  for (long k : {-1L, 135L}) {
    const QuarticCurve c{Rational(k)};
    const WeierstrassCurve e = e3_curve(Rational(k));
    const TorsionGroup g = torsion_subgroup(e);
    std::vector<std::string> pre;
    for (const auto& t : g.points) {
      if (small_order(e, t) != 2u) continue;
      for (const auto& p : preimages(3, c, t)) pre.push_back(p.str());
    }
    if (pre.empty()) throw IntegrityError("no point of C_k over a 2-torsion point of E3");
    ks.insert(Rational(k));
    r.certificates.push_back({"torsion", "k = " + std::to_string(k) + ": E3 torsion " + g.structure() +
                                             ", preimages of the 2-torsion point " + join(pre)});
  }
  for (const auto& k : found) {
    if (!ks.count(k)) throw IntegrityError("order-2 locus has a point over an unexpected k");
  }
  finalize(r, ks);
  return r;
}

CaseReport case3() {
  CaseReport r;
  r.case_id = 3;
  r.target = "E1, E3";
  const QPoly phi_p = pow(qpoly({1, 1}), 3u) * qpoly({-3, 1});
  const QPoly psi_p = qpoly({0, 0, 0, -3, -2});
  const GcdBoundCertificate cert = gcd_bound(phi_p, psi_p);
  r.certificates.push_back({"gcd-bound", "F phi + G psi = 1 for phi = " + to_string(phi_p) +
                                             ", psi = " + to_string(psi_p) + "; R = " + cert.r.get_str()});

  std::set<Rational> ks;
  std::vector<std::string> sols;
  for (const auto& s : case3_divisor_solve(cert.r)) {
    if (!s.k.is_integer()) continue;
    ks.insert(s.k);
    sols.push_back("(u, v) = (" + std::to_string(s.u) + ", " + std::to_string(s.v) + ") -> " + s.k.str());
  }
  r.certificates.push_back(
      {"divisor-system", "(u + v)^3 (u - 3v) = d over d | " + cert.r.get_str() + ": " + join(sols, "; ")});
  for (const auto& k : ks) {
    if (k == 0) continue;
    const bool ok = has_order(torsion_subgroup(e1_curve(k)), 3) || has_order(torsion_subgroup(e3_curve(k)), 3);
    if (!ok) throw IntegrityError("Case 3 k without 3-torsion");
    r.certificates.push_back({"torsion", "k = " + k.str() + ": " + torsion_line(k)});
  }
  finalize(r, ks);
  return r;
}

Rational case4_k(const Rational& t) {
  const Rational t2 = t * t, t4 = t2 * t2;
  const Rational den = pow(t2 - Rational(3), 3u);
  if (den == 0) throw DomainError("t^2 = 3 is a pole");
  return (Rational(Integer(-27), Integer(16)) * t4 * t2 + Rational(Integer(243), Integer(16)) * t4) / den;
}

CaseReport case4() {
  CaseReport r;
  r.case_id = 4;
  r.target = "E1, E3";
  std::set<Rational> ks;
  const auto thue_line = [](const ThueForm& f, long m, const std::vector<IntPair>& sols) {
    std::vector<std::string> s;
    for (const auto& [u, v] : sols) s.push_back("(" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return f.str() + " = " + std::to_string(m) + " in |s|, |t| <= " + std::to_string(kDefaultThueBox) + ": " +
           (s.empty() ? std::string("none") : join(s));
  };
  const auto record = [&](const Integer& a, const Integer& b, long c) {
    if (a * a - 3 * b * b != c) throw IntegrityError("Case 4 parametrization misses a^2 - 3b^2");
    const Rational t{a, b};
    const Rational k = case4_k(t);
    ks.insert(k);
    return "(a, b) = (" + a.get_str() + ", " + b.get_str() + "), t = " + t.str() + ", k = " + k.str();
  };

  // a^2 - 3b^2 = 1, a even: b = s^2 + t^2, a = 2st - 2s^2 - 2t^2.
  const ThueForm quartic(ints({1, -8, 6, -8, 1}));
  const auto q1 = thue_bounded(quartic, Integer(1));
  std::set<std::string> lines;
  for (const auto& [s, t] : q1) {
    const Integer S(s), T(t);
    lines.insert(record(2 * S * T - 2 * S * S - 2 * T * T, S * S + T * T, 1));
  }
  r.certificates.push_back({"thue-box", "a^2 - 3b^2 = 1: " + thue_line(quartic, 1, q1) + "; " +
                                            join(std::vector<std::string>(lines.begin(), lines.end()), "; ")});
  r.certificates.push_back({"parity", "a^2 - 3b^2 = 1 with a odd forces -2s^4 + 6t^4 = 1, impossible mod 2"});

  // a^2 - 3b^2 = -3, a even.
  const auto q9 = thue_bounded(quartic, Integer(9));
  if (!q9.empty()) throw IntegrityError("Case 4 quartic = 9 has solutions");
  r.certificates.push_back({"thue-box", "a^2 - 3b^2 = -3: " + thue_line(quartic, 9, q9)});
  r.certificates.push_back({"parity", "a^2 - 3b^2 = -3 with a odd forces 2s^4 - 6t^4 = -9, impossible mod 2"});

  // a^2 - 3b^2 = 6: (a + b)/2 = c s^2, (a + 3b)/2 = -(6/c) t^2.
  lines.clear();
  for (long c : {1L, 2L}) {
    const ThueForm f = c == 1 ? ThueForm(ints({-12, 0, 0, 0, 1})) : ThueForm(ints({-3, 0, 0, 0, 4}));
    const auto sols = thue_bounded(f, Integer(1));
    for (const auto& [s, t] : sols) {
      for (long sign : {1L, -1L}) {
        const long cc = sign * c;
        const Integer S2 = Integer(s) * s, T2 = Integer(t) * t;
        lines.insert(record(3 * cc * S2 + (6 / cc) * T2, -(6 / cc) * T2 - cc * S2, 6));
      }
    }
    r.certificates.push_back({"thue-box", "a^2 - 3b^2 = 6, c = +-" + std::to_string(c) + ": " + thue_line(f, 1, sols)});
  }
  r.certificates.push_back({"thue-box", "a^2 - 3b^2 = 6 gives " +
                                            join(std::vector<std::string>(lines.begin(), lines.end()), "; ")});

  // Pell-feasible t in a box: only k = 135 carries a rational point of order 4.
  std::set<Integer> pell_k;
  for (long c : {1L, -3L, 6L}) {
    for (const auto& [a, b] : pell_bounded(c, 400)) {
      if (b == 0 || std::gcd(a, b) != 1) continue;
      const Rational k = case4_k(Rational(Integer(a), Integer(b)));
      if (k.is_integer() && k != 0) pell_k.insert(k.num());
    }
  }
  std::vector<Integer> with4;
  for (const auto& k : pell_k) {
    if (has_order(torsion_subgroup(e1_curve(Rational(k))), 4) || has_order(torsion_subgroup(e3_curve(Rational(k))), 4))
      with4.push_back(k);
  }
  r.certificates.push_back({"pell-box", "a^2 - 3b^2 in {1, -3, 6}, |a|, |b| <= 400: integral k " +
                                            set_str(std::vector<Integer>(pell_k.begin(), pell_k.end())) +
                                            ", with a rational point of order 4 " + set_str(with4)});

  // E3 side: both quartic covers are rank-zero curves with two points each.
  r.certificates.push_back({"imported",
                            "u^2 = 3(t - 1)(t - 3)(t^2 - 3) and u^2 = 3(t + 1)(t + 3)(t^2 - 3) have rank zero "
                            "and torsion Z/2Z; their points are t = 1, 3 and t = -1, -3",
                            true});
  for (const auto& f : {ints({-27, 36, 0, -12, 3}), ints({-27, -36, 0, 12, 3})}) {
    const auto pts = search_hyperelliptic(f, 1000);
    std::vector<std::string> ts;
    for (const auto& p : pts) {
      if (p.at_infinity) throw IntegrityError("unexpected point at infinity");
      ts.push_back(p.x.str());
      ks.insert(case4_k(p.x));
    }
    r.certificates.push_back(
        {"bounded-search", "u^2 = " + to_string(from_ints(f), "t") + ", t-height <= 1000: t in {" + join(ts) + "}"});
  }

  const Rational k135(135);
  if (!has_order(torsion_subgroup(e1_curve(k135)), 4)) throw IntegrityError("E1 at k = 135 lacks 4-torsion");
  r.certificates.push_back({"torsion", "k = 135: " + torsion_line(k135)});
  finalize(r, ks);
  return r;
}

CaseReport case5() {
  CaseReport r;
  r.case_id = 5;
  r.target = "E1, E3";
  const QPoly quartic = qpoly({1, -12, 14, 12, 1});
  const QPoly phi_p = pow(quartic, 3u);
  const QPoly psi_p = QPoly::constant(Rational(19683)) * qpoly({0, 0, 0, 0, 0, -1, 11, 1});
  const GcdBoundCertificate cert = gcd_bound(phi_p, psi_p);
  r.certificates.push_back({"gcd-bound", "F phi + G psi = 1 for phi = (" + to_string(quartic) +
                                             ")^3, psi = 3^9 (x^7 + 11x^6 - x^5); R = " + cert.r.get_str()});

  const ThueForm form(ints({1, -12, 14, 12, 1}));
  std::set<Integer> ms;
  std::vector<std::string> pairs;
  for (const auto& d : cube_divisors(cert.r)) {
    Integer c;
    exact_root(d, 3, c);
    for (int sign : {1, -1}) {
      const auto sols = thue_bounded(form, sign * c);
      pairs.push_back(Integer(sign * c).get_str() + ": " + std::to_string(sols.size()));
      for (const auto& [u, v] : sols) {
        if (std::gcd(u, v) != 1) continue;
        const Integer U(u), V(v);
        Integer u5, v5;
        mpz_pow_ui(u5.get_mpz_t(), U.get_mpz_t(), 5);
        mpz_pow_ui(v5.get_mpz_t(), V.get_mpz_t(), 5);
        const Integer f = form(U, V);
        const Rational m{19683 * u5 * v5 * (U * U + 11 * U * V - V * V), f * f * f};
        if (m.is_integer()) ms.insert(m.num());
      }
    }
  }
  r.certificates.push_back({"thue-box", form.str() + " = m for m = +-(cube root of a cube divisor of R), box " +
                                            std::to_string(kDefaultThueBox) + ", solutions per m: " + join(pairs, ", ")});
  r.m_values.assign(ms.begin(), ms.end());

  std::set<Rational> ks;
  for (const auto& m : ms) {
    for (const auto& k : k_from_16k2_27k(m)) ks.insert(k);
  }
  for (const auto& k : ks) {
    if (!k.is_integer() || k == 0) continue;
    if (!has_order(torsion_subgroup(e1_curve(k)), 5) && !has_order(torsion_subgroup(e3_curve(k)), 5))
      throw IntegrityError("Case 5 k without 5-torsion");
    r.certificates.push_back({"torsion", "k = " + k.str() + ": " + torsion_line(k)});
  }
  // (u, v) = (2, -1) gives 16k^2 + 27k = 11967264 and t = -2 on the order-5 family.
  r.certificates.push_back({"j-family", "f_5(-2) = " + jfamily_eval(5, Rational(-2)).str() + " = j(E1) at k = 864"});
  finalize(r, ks);
  return r;
}

CaseReport case6() {
  CaseReport r;
  r.case_id = 6;
  r.target = "E1, E3";
  const QPoly octic = qpoly({1, 12, 42, 56, 35, 0, -14, -4, 1});
  const LocalVerdict v = qp_soluble(SuperellipticModel{Integer(9), 4, octic}, Integer(3));
  if (v.status != LocalStatus::kInsoluble) throw IntegrityError("9y^4 = octic is not Q_3-insoluble");
  r.local = v;
  r.certificates.push_back({"local-verdict", "9y^4 = " + to_string(octic, "t") + " has no Q_3-points (depth " +
                                                 std::to_string(v.depth_used) + ")"});

  r.certificates.push_back({"imported",
                            "y^2 = x^6 - 6x^5 - 15x^4 + 60x^2 + 96x - 64 has exactly four rational points "
                            "(Chabauty); they pull back to t = infinity, 0, -1, i.e. k = 0, infinity",
                            true});
  const auto pts = search_hyperelliptic(ints({-64, 96, 60, 0, -15, -6, 1}), 1000);
  if (pts.size() != 4) throw IntegrityError("bounded search on the genus 2 quotient disagrees with four points");
  std::vector<std::string> shown;
  for (const auto& p : pts) shown.push_back(p.str());
  r.certificates.push_back({"bounded-search", "x-height <= 1000 on the genus 2 quotient finds " + join(shown)});
  return r;
}

std::vector<CaseReport> case_reports(int n) {
  switch (n) {
    case 1:
      return {case1_report()};
    case 2:
      return {case2_e1(), case2_e3()};
    case 3:
      return {case3()};
    case 4:
      return {case4()};
    case 5:
      return {case5()};
    case 6:
      return {case6()};
    default:
      throw DomainError("case number must be between 1 and 6");
  }
}

ParamFamily parse_param_family(const std::string& name) {
  if (name == "c12") return ParamFamily::kC12;
  if (name == "d12") return ParamFamily::kD12;
  if (name == "d13") return ParamFamily::kD13;
  if (name == "d33") return ParamFamily::kD33;
  if (name == "d14") return ParamFamily::kD14;
  throw DomainError("unknown family '" + name + "' (c12, d12, d13, d33, d14)");
}

std::string to_string(ParamFamily f) {
  switch (f) {
    case ParamFamily::kC12:
      return "c12";
    case ParamFamily::kD12:
      return "d12";
    case ParamFamily::kD13:
      return "d13";
    case ParamFamily::kD33:
      return "d33";
    case ParamFamily::kD14:
      return "d14";
  }
  return "?";
}

namespace {

// Points of exact order n on E whose x-coordinate is a root of `xs`.
std::vector<EPoint> order_n_points(const WeierstrassCurve& e, const QPoly& xs, unsigned n) {
  std::vector<EPoint> out;
  for (const auto& x : rational_roots(xs)) {
    for (const auto& p : points_with_x(e, x)) {
      if (small_order(e, p) == n) out.push_back(p);
    }
  }
  return out;
}

QPoly two_division(const WeierstrassCurve& e) {
  return QPoly({e.b6(), Rational(2) * e.b4(), e.b2(), Rational(4)});
}

Rational horner(std::initializer_list<long> c, const Rational& x) {
  Rational out(0);
  for (auto it = std::rbegin(c); it != std::rend(c); ++it) out = out * x + Rational(*it);
  return out;
}

Rational d14_k(const Rational& x, const Rational& y) {
  const Rational f = horner({-725594112, 2841910272, -1763596800, 330884352, 6438528, -11897280, 1982880, -151632, 5832}, x);
  const Rational g = horner({403107840, -6651279360, 9216052992, -2831832576, -162922752, 192316032, -33195744, 2869344,
                             -186624, 11664, -729},
                            x);
  const Rational h = pow(x * x - Rational(12) * x - Rational(12), 6u);
  if (h == 0) throw DomainError("pole of the order-4 parametrization");
  return (f * y + g) / h;
}

}  // namespace

ParamResult param_k(ParamFamily family, const Rational& a, const std::optional<Rational>& y) {
  if ((family == ParamFamily::kD14) != y.has_value())
    throw DomainError(family == ParamFamily::kD14 ? "d14 takes a point x,y" : "this family takes one rational");
  ParamResult r;
  r.family = family;
  const Rational a2 = a * a;
  switch (family) {
    case ParamFamily::kC12: {
      if (a == 1) throw DomainError("t = 1 is a pole");
      r.k = Rational(Integer(27), Integer(8)) * a2 * a2 *
            (a2 - Rational(Integer(3), Integer(2)) * a + Rational(Integer(3), Integer(2))) / pow(a - Rational(1), 3u);
      break;
    }
    case ParamFamily::kD12:
      r.k = Rational(Integer(-27), Integer(64)) * a2 * a + Rational(Integer(81), Integer(64)) * a -
            Rational(Integer(27), Integer(32));
      break;
    case ParamFamily::kD13:
      if (a == 0) throw DomainError("a = 0 is a pole");
      r.k = Rational(-27) * pow((a - Rational(1)) * (a + Rational(1)), 3u) * (a2 + Rational(3)) / (Rational(256) * a2);
      break;
    case ParamFamily::kD33:
      if (a == 0) throw DomainError("a = 0 is a pole");
      r.k = (a - Rational(3)) * (a + Rational(3)) * pow(a2 + Rational(3), 3u) / (Rational(256) * a2);
      break;
    case ParamFamily::kD14:
      if (*y * *y != a2 * a - Rational(12) * a) throw DomainError("(x, y) is not on y^2 = x^3 - 12x");
      r.k = d14_k(a, *y);
      break;
  }
  if (singular_k(r.k)) throw DomainError("parameter gives the singular value k = " + r.k.str());

  const Family fam = make_family(r.k);
  switch (family) {
    case ParamFamily::kC12: {
      const CPoint p = CPoint::affine(Rational(3) * a / (Rational(2) * a - Rational(2)), Rational(3) * a / Rational(2));
      if (!fam.curve.contains(p)) throw IntegrityError("C12 point is not on C_k");
      const EPoint q = phi(1, fam.curve, p);
      r.order = 2;
      if (small_order(fam.e1, q) == 2u) r.witnesses.emplace_back(1, q);
      r.point = p;
      r.certificate = p.str() + " lies on C_k and maps to " + to_string(q) + " of order 2 on E1";
      break;
    }
    case ParamFamily::kD12: {
      r.order = 2;
      for (int i : {1, 3}) {
        const auto pts = order_n_points(fam.e(i), two_division(fam.e(i)), 2);
        if (pts.empty()) throw IntegrityError("D12 curve without 2-torsion");
        r.witnesses.emplace_back(i, pts.front());
      }
      r.certificate = "E1 and E3 both have a rational 2-torsion point";
      break;
    }
    case ParamFamily::kD13:
    case ParamFamily::kD33:
    case ParamFamily::kD14: {
      const int i = family == ParamFamily::kD33 ? 3 : 1;
      r.order = family == ParamFamily::kD14 ? 4 : 3;
      for (const auto& p : order_n_points(fam.e(i), division_polynomial(fam.e(i), r.order), r.order))
        r.witnesses.emplace_back(i, p);
      r.certificate = "the " + std::to_string(r.order) + "-division polynomial of E" + std::to_string(i) +
                      " has a rational root with rational y";
      break;
    }
  }
  if (r.witnesses.empty()) throw IntegrityError("parametrization certificate failed to verify");
  return r;
}

std::vector<StoredModel> stored_models() {
  const QPoly d5 = qpoly({1, 12, 14, -12, 1});
  const QPoly d6 = qpoly({0, -48, -24, 0, 1});
  const QPoly d7 = qpoly({1, 12, 42, 56, 35, 0, -14, -4, 1});
  const QPoly d8 = qpoly({16, 64, 96, 64, 0, -32, -16, 0, 1});
  const QPoly d9 = qpoly({1, 12, 54, 128, 189, 180, 114, 36, -18, -28, -12, 0, 1});
  const auto quartic = [](long c, const QPoly& f) { return SuperellipticModel{Integer(c), 4, f}; };

  std::vector<StoredModel> out;
  out.push_back({"D15", "genus 3, order-5 points on E1", quartic(1, d5), {}, {}, "open", false});
  out.push_back({"D35", "order-5 points on E3", quartic(9, d5), {}, 3u, "no Q_3-points", false});
  out.push_back({"D16", "order-6 points on E1", quartic(1, d6), {}, {}, "open", false});
  out.push_back({"D36", "order-6 points on E3", quartic(9, d6), {}, {}, "open", false});
  out.push_back({"D17", "order-7 points on E1", quartic(1, d7), {}, {}, "points over k = 0, infinity only", true});
  out.push_back({"D37", "order-7 points on E3", quartic(9, d7), {}, 3u, "no Q_3-points", false});
  out.push_back({"D18", "order-8 points on E1", quartic(1, d8), {}, {}, "points over k = 0, infinity only", true});
  out.push_back({"D19", "order-9 points on E1", quartic(1, d9), {}, {}, "open", false});
  out.push_back({"D39", "order-9 points on E3", quartic(9, d9), {}, 2u, "no Q_2-points", false});
  WeierstrassCurve c13;
  c13.a1 = Rational(1);
  c13.a3 = Rational(1);
  c13.a4 = Rational(-1);
  out.push_back({"C13", "genus 1, points of C_k with image of order 3 on E1", {}, c13, {}, "rank zero, k = 0, infinity only",
                 true});
  out.push_back({"C32", "genus 2, points of C_k with image of order 2 on E3",
                 SuperellipticModel{Integer(1), 2, qpoly({1, 6, 39, 52, 39, 6, 1})}, {}, {},
                 "12 points, k = 0, infinity, -1, 135", true});
  return out;
}

}  // namespace ckp
