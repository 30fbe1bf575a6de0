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


#include "ckpoints/ffcheck.hpp"

#include <exception>
#include <vector>

#include "ckpoints/errors.hpp"
#include "ckpoints/family.hpp"
#include "ckpoints/prime_field.hpp"

namespace ckp {

namespace {

using u64 = std::uint64_t;

u64 residue(const Integer& a, u64 p) {
  Integer r = a % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

u64 residue(const Rational& a, u64 p) {
  const Fp num(residue(a.num(), p), p), den(residue(a.den(), p), p);
  return (num / den).value();
}

// Long-Weierstrass coefficients reduced mod p.
struct ModCurve {
  u64 p, a1, a2, a3, a4, a6;

  ModCurve(int i, const Integer& k, u64 p) : p(p) {
    const auto e = e_curve(i, Rational(k));
    a1 = residue(e.a1, p);
    a2 = residue(e.a2, p);
    a3 = residue(e.a3, p);
    a4 = residue(e.a4, p);
    a6 = residue(e.a6, p);
  }

  bool contains(u64 x, u64 y) const {
    const u64 lhs = (y * y + a1 * x % p * y + a3 * y) % p;
    const u64 rhs = ((x * x % p + a2 * x) % p * x + a4 * x + a6) % p;
    return lhs == rhs;
  }
};

// is_square[v] for v in F_p, 0 counted as a square.
std::vector<char> square_table(u64 p) {
  std::vector<char> sq(p, 0);
  for (u64 y = 0; y < p; ++y) sq[y * y % p] = 1;
  return sq;
}

u64 quartic_row(u64 x, u64 kp, u64 p) {
  const u64 x2 = x * x % p, target = (kp + p - x2 * x % p) % p;
  u64 n = 0;
  for (u64 y = 0; y < p; ++y) {
    if ((x2 + y) % p * (y * y % p) % p == target) ++n;
  }
  return n;
}

}  // namespace

void check_good_prime(const Integer& k, u64 p) {
  if (p < 5 || !is_prime(Integer(static_cast<unsigned long>(p)))) {
    throw DomainError("p = " + std::to_string(p) + " is not a prime greater than 3");
  }
  if (p >= kMaxCountPrime) throw DomainError("p = " + std::to_string(p) + " is beyond the brute-force range");
  const Integer pz(static_cast<unsigned long>(p));
  if (k % pz == 0) throw DomainError("p = " + std::to_string(p) + " divides k: C_k is singular mod p");
  if ((16 * k + 27) % pz == 0) throw DomainError("p = " + std::to_string(p) + " divides 16k + 27: C_k is singular mod p");
  for (int i = 1; i <= 3; ++i) {
    const Rational d = e_curve(i, Rational(k)).discriminant();
    if (d.num() % pz == 0) {
      throw DomainError("p = " + std::to_string(p) + " divides disc(E_" + std::to_string(i) +
                        ") = " + d.str());
    }
  }
}

u64 count_affine_quartic_serial(const Integer& k, u64 p) {
  const u64 kp = residue(k, p);
  u64 n = 0;
  for (u64 x = 0; x < p; ++x) n += quartic_row(x, kp, p);
  return n;
}

u64 count_affine_quartic(const Integer& k, u64 p) {
  const u64 kp = residue(k, p);
  const long long lp = static_cast<long long>(p);
  u64 n = 0;
#pragma omp parallel for schedule(static) reduction(+ : n)
  for (long long x = 0; x < lp; ++x) n += quartic_row(static_cast<u64>(x), kp, p);
  return n;
}

u64 count_e_points(int i, const Integer& k, u64 p) {
  const ModCurve e(i, k, p);
  const auto sq = square_table(p);
  // y^2 + (a1 x + a3) y = r(x) has 1 + (disc / p) solutions, disc = (a1 x + a3)^2 + 4 r(x).
  u64 n = 1;
  for (u64 x = 0; x < p; ++x) {
    const u64 b = (e.a1 * x + e.a3) % p;
    const u64 r = ((x * x % p + e.a2 * x) % p * x + e.a4 * x + e.a6) % p;
    const u64 disc = (b * b + 4 * r) % p;
    n += disc == 0 ? 1 : sq[disc] ? 2 : 0;
  }
  return n;
}

namespace {

TraceReport finish(const Integer& k, u64 p, u64 affine) {
  TraceReport r;
  r.k = k;
  r.p = p;
  r.countC = affine + 2;  // (1 : 0 : 0) and (0 : 1 : 0)
  const long base = static_cast<long>(p) + 1;
  r.a1 = base - static_cast<long>(count_e_points(1, k, p));
  r.a2 = base - static_cast<long>(count_e_points(2, k, p));
  r.a3 = base - static_cast<long>(count_e_points(3, k, p));
  r.identity_holds = static_cast<long>(r.countC) == base - r.a1 - r.a2 - r.a3;
  return r;
}

}  // namespace

TraceReport count_curve_points(const Integer& k, u64 p) {
  check_good_prime(k, p);
  return finish(k, p, count_affine_quartic(k, p));
}

TraceReport count_curve_points_serial(const Integer& k, u64 p) {
  check_good_prime(k, p);
  return finish(k, p, count_affine_quartic_serial(k, p));
}

unsigned phi_degree(int i) {
  switch (i) {
    case 1: return 2;
    case 2: return 3;
    case 3: return 6;
    default: throw DomainError("quotient map index must be 1, 2 or 3");
  }
}

FiberStats fiber_stats(int i, const Integer& k, u64 p) {
  phi_degree(i);
  check_good_prime(k, p);
  const ModCurve e(i, k, p);
  const Fp kf(residue(k, p), p);
  const u64 kp = kf.value();

  // Index p*x + y for affine images, p*p for the identity.
  std::vector<unsigned> fiber(p * p + 1, 0);
  fiber[p * p] = 2;  // both points at infinity map to the identity
  u64 source = 2;
  for (u64 x = 0; x < p; ++x) {
    const u64 x2 = x * x % p, target = (kp + p - x2 * x % p) % p;
    for (u64 y = 0; y < p; ++y) {
      if ((x2 + y) % p * (y * y % p) % p != target) continue;
      ++source;
      const auto img = phi_affine<Fp>(i, kf, Fp(x, p), Fp(y, p));
      if (!img) {
        ++fiber[p * p];
        continue;
      }
      const u64 ix = img->first.value(), iy = img->second.value();
      if (!e.contains(ix, iy)) {
        throw IntegrityError("phi_" + std::to_string(i) + " image off E_" + std::to_string(i) +
                             " over F_" + std::to_string(p));
      }
      ++fiber[p * ix + iy];
    }
  }

  FiberStats s;
  s.i = i;
  s.k = k;
  s.p = p;
  s.source_points = source;
  s.image_points = 1;
  ++s.histogram[fiber[p * p]];
  for (u64 x = 0; x < p; ++x) {
    for (u64 y = 0; y < p; ++y) {
      if (!e.contains(x, y)) continue;
      ++s.image_points;
      ++s.histogram[fiber[p * x + y]];
    }
  }
  return s;
}

}  // namespace ckp
