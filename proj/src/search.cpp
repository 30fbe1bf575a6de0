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

#include "ckpoints/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "ckpoints/errors.hpp"

namespace ckp {

namespace {

using i128 = __int128;

i128 to_i128(const Integer& n) {
  // Callers guarantee |n| < 2^100.
  Integer hi = n >> 64, lo = n - (hi << 64);
  return (static_cast<i128>(hi.get_si()) << 64) + static_cast<i128>(lo.get_ui());
}

Integer from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(u & ~0UL);
  return neg ? Integer(-out) : out;
}

struct Cubic {
  i128 c2, c0;
  i128 operator()(i128 w) const { return (w + c2) * w * w + c0; }
};

// First w in [lo, hi] where g changes sign, with g monotone in the given
// direction; the root if g vanishes there.
void bisect(const Cubic& g, i128 lo, i128 hi, bool increasing, std::vector<i128>& out) {
  if (lo > hi) return;
  const auto past = [&](i128 w) { return increasing ? g(w) >= 0 : g(w) <= 0; };
  if (!past(hi)) return;
  while (lo < hi) {
    const i128 mid = lo + (hi - lo) / 2;
    if (past(mid)) hi = mid; else lo = mid + 1;
  }
  if (g(lo) == 0) out.push_back(lo);
}

bool fast_roots(const Integer& c2, const Integer& c0, std::vector<Integer>& out) {
  if (mpz_sizeinbase(c0.get_mpz_t(), 2) > 100 || mpz_sizeinbase(c2.get_mpz_t(), 2) > 36) return false;
  Integer cube_root;
  mpz_root(cube_root.get_mpz_t(), Integer(abs(c0)).get_mpz_t(), 3);
  // Every real root satisfies |w| <= 2 max(c2, |c0|^(1/3)).
  const Integer bound = 2 * std::max<Integer>(c2, cube_root + 1) + 1;
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 38) return false;
  const Cubic g{to_i128(c2), to_i128(c0)};
  const i128 r = to_i128(bound);
  // g' = w (3w + 2 c2): increasing, decreasing, increasing.
  const i128 turn_floor = -((2 * g.c2) / 3) - ((2 * g.c2) % 3 != 0 ? 1 : 0);
  const i128 turn_ceil = -((2 * g.c2) / 3);
  std::vector<i128> roots;
  bisect(g, -r, turn_floor, true, roots);
  bisect(g, turn_ceil, 0, false, roots);
  bisect(g, 0, r, true, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.clear();
  for (i128 w : roots) out.push_back(from_i128(w));
  return true;
}

std::vector<Integer> generic_integer_roots(const Integer& c2, const Integer& c0) {
  std::vector<Integer> out;
  for (const auto& r : rational_roots(QPoly({Rational(c0), Rational(0), Rational(c2), Rational(1)}))) {
    if (r.is_integer()) out.push_back(r.num());
  }
  return out;
}

std::vector<CPoint> infinite_points() {
  return {CPoint(Integer(1), Integer(0), Integer(0)), CPoint(Integer(0), Integer(1), Integer(0))};
}

void check_height(long height) {
  if (height < 1) throw DomainError("height bound must be at least 1");
}

void finish(std::vector<CPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Points of C_k over x = a/b for integral k, via y = w / b^2.
void ck_fiber_points(const Integer& k, long a, long b, std::vector<CPoint>& out) {
  const Integer A(a), B(b);
  const Integer b3 = B * B * B;
  const Integer c2 = A * A, c0 = A * A * A * b3 - k * b3 * b3;
  std::vector<Integer> ws;
  if (!fast_roots(c2, c0, ws)) ws = generic_integer_roots(c2, c0);
  for (const auto& w : ws) out.push_back(CPoint::affine(Rational(A, B), Rational(w, B * B)));
}

}  // namespace

std::vector<Integer> integer_roots_depressed_cubic(const Integer& c2, const Integer& c0) {
  if (c2 < 0) throw DomainError("expected a nonnegative x^2 coefficient");
  std::vector<Integer> out;
  if (!fast_roots(c2, c0, out)) out = generic_integer_roots(c2, c0);
  return out;
}

std::vector<CPoint> search_ck_serial(const Rational& k, long height) {
  check_height(height);
  const QuarticCurve c(k);
  std::vector<CPoint> pts = infinite_points();
  for (long b = 1; b <= height; ++b) {
    for (long a = -height; a <= height; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x{Integer(a), Integer(b)};
      for (const auto& y : rational_roots(c.fiber(x))) pts.push_back(CPoint::affine(x, y));
    }
  }
  finish(pts);
  return pts;
}

std::vector<CPoint> search_ck(const Rational& k, long height) {
  check_height(height);
  const QuarticCurve c(k);
  std::vector<CPoint> pts = infinite_points();
#pragma omp parallel
  {
    std::vector<CPoint> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long b = 1; b <= height; ++b) {
      for (long a = -height; a <= height; ++a) {
        if (std::gcd(a, b) != 1) continue;
        if (k.is_integer()) {
          ck_fiber_points(k.num(), a, b, local);
        } else {
          const Rational x{Integer(a), Integer(b)};
          for (const auto& y : rational_roots(c.fiber(x))) local.push_back(CPoint::affine(x, y));
        }
      }
    }
#pragma omp critical
    pts.insert(pts.end(), local.begin(), local.end());
  }
  finish(pts);
  return pts;
}

namespace {

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q.sign() < 0) return false;
  Integer n, d;
  if (!exact_root(q.num(), 2, n) || !exact_root(q.den(), 2, d)) return false;
  out = Rational(n, d);
  return true;
}

void e_fiber_points(const WeierstrassCurve& e, const Rational& x, std::vector<EPoint>& out) {
  // y^2 + (a1 x + a3) y - rhs = 0
  const Rational lin = e.a1 * x + e.a3;
  const Rational rhs = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
  Rational root;
  if (!rational_sqrt(lin * lin + Rational(4) * rhs, root)) return;
  const Rational half(Integer(1), Integer(2));
  out.push_back(EPoint::affine(x, (-lin - root) * half));
  if (!root.is_zero()) out.push_back(EPoint::affine(x, (-lin + root) * half));
}

void finish(std::vector<EPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<EPoint> search_e_serial(const WeierstrassCurve& e, long height) {
  check_height(height);
  if (e.discriminant().is_zero()) throw DomainError("singular Weierstrass model");
  std::vector<EPoint> pts;
  for (long b = 1; b <= height; ++b) {
    for (long a = -height; a <= height; ++a) {
      if (std::gcd(a, b) == 1) e_fiber_points(e, Rational(Integer(a), Integer(b)), pts);
    }
  }
  finish(pts);
  return pts;
}

std::vector<EPoint> search_e(const WeierstrassCurve& e, long height) {
  check_height(height);
  if (e.discriminant().is_zero()) throw DomainError("singular Weierstrass model");
  std::vector<EPoint> pts;
#pragma omp parallel
  {
    std::vector<EPoint> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long b = 1; b <= height; ++b) {
      for (long a = -height; a <= height; ++a) {
        if (std::gcd(a, b) == 1) e_fiber_points(e, Rational(Integer(a), Integer(b)), local);
      }
    }
#pragma omp critical
    pts.insert(pts.end(), local.begin(), local.end());
  }
  finish(pts);
  return pts;
}

std::string HyperellipticPoint::str() const {
  if (at_infinity) return "(1 : " + y.str() + " : 0)";
  return "(" + x.str() + ", " + y.str() + ")";
}

bool operator<(const HyperellipticPoint& p, const HyperellipticPoint& q) {
  if (p.at_infinity != q.at_infinity) return p.at_infinity;
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

namespace {

bool square_residue(unsigned long v, unsigned m) {
  static const auto table = [] {
    std::array<std::vector<bool>, 3> t{std::vector<bool>(64), std::vector<bool>(63), std::vector<bool>(65)};
    const unsigned mods[] = {64, 63, 65};
    for (int i = 0; i < 3; ++i) {
      for (unsigned x = 0; x < mods[i]; ++x) t[i][x * x % mods[i]] = true;
    }
    return t;
  }();
  return table[m == 64 ? 0 : m == 63 ? 1 : 2][v % m];
}

// Exact square root of v >= 0 if v is a square.
bool i128_sqrt(i128 v, i128& r) {
  const auto low = static_cast<unsigned long>(v & 0xffffffffffffffffULL);
  const auto mod6365 = static_cast<unsigned long>(v % (63 * 65));
  if (!square_residue(low, 64) || !square_residue(mod6365, 63) || !square_residue(mod6365, 65)) return false;
  r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

struct Sextic {
  std::vector<Integer> f;  // padded to even degree
  std::vector<i128> small;  // f in 128 bits when every value fits
  unsigned half = 0;

  Sextic(std::vector<Integer> coeffs, long height) : f(std::move(coeffs)) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw DomainError("hyperelliptic search needs a nonconstant f");
    if (f.size() % 2 == 0) f.emplace_back(0);
    half = static_cast<unsigned>(f.size() - 1) / 2;
    // |F(a, b)| <= sum |f_i| H^deg must stay below 2^120.
    Integer bound = 0, hpow;
    for (const auto& c : f) bound += abs(c);
    mpz_pow_ui(hpow.get_mpz_t(), Integer(height).get_mpz_t(), static_cast<unsigned long>(f.size() - 1));
    if (mpz_sizeinbase(Integer(bound * hpow).get_mpz_t(), 2) < 120) {
      for (const auto& c : f) small.push_back(to_i128(c));
    }
  }

  void at_infinity(std::vector<HyperellipticPoint>& out) const {
    Integer r;
    if (f.back() < 0 || !exact_root(f.back(), 2, r)) return;
    out.push_back({true, Rational(0), Rational(-r)});
    if (r != 0) out.push_back({true, Rational(0), Rational(r)});
  }

  void emit(long a, long b, const Integer& r, std::vector<HyperellipticPoint>& out) const {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), Integer(b).get_mpz_t(), half);
    const Rational x{Integer(a), Integer(b)};
    out.push_back({false, x, Rational{Integer(-r), scale}});
    if (r != 0) out.push_back({false, x, Rational{r, scale}});
  }

  void fiber(long a, long b, std::vector<HyperellipticPoint>& out) const {
    if (!small.empty()) {
      i128 value = small.back(), bpow = 1;
      for (std::size_t i = small.size() - 1; i-- > 0;) {
        bpow *= b;
        value = value * a + small[i] * bpow;
      }
      i128 r;
      if (value >= 0 && i128_sqrt(value, r)) emit(a, b, from_i128(r), out);
      return;
    }
    const Integer A(a), B(b);
    Integer value = f.back(), bpow = 1;
    for (std::size_t i = f.size() - 1; i-- > 0;) {
      bpow *= B;
      value = value * A + f[i] * bpow;
    }
    Integer r;
    if (value >= 0 && exact_root(value, 2, r)) emit(a, b, r, out);
  }
};

void finish(std::vector<HyperellipticPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<HyperellipticPoint> search_hyperelliptic_serial(const std::vector<Integer>& f, long height) {
  check_height(height);
  const Sextic s(f, height);
  std::vector<HyperellipticPoint> pts;
  s.at_infinity(pts);
  for (long b = 1; b <= height; ++b) {
    for (long a = -height; a <= height; ++a) {
      if (std::gcd(a, b) == 1) s.fiber(a, b, pts);
    }
  }
  finish(pts);
  return pts;
}

std::vector<HyperellipticPoint> search_hyperelliptic(const std::vector<Integer>& f, long height) {
  check_height(height);
  const Sextic s(f, height);
  std::vector<HyperellipticPoint> pts;
  s.at_infinity(pts);
#pragma omp parallel
  {
    std::vector<HyperellipticPoint> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long b = 1; b <= height; ++b) {
      for (long a = -height; a <= height; ++a) {
        if (std::gcd(a, b) == 1) s.fiber(a, b, local);
      }
    }
#pragma omp critical
    pts.insert(pts.end(), local.begin(), local.end());
  }
  finish(pts);
  return pts;
}

}  // namespace ckp
