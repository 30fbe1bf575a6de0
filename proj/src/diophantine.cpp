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

#include "ckpoints/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "ckpoints/errors.hpp"

namespace ckp {

ThueForm::ThueForm(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 4) throw DomainError("Thue form must have degree at least 3");
  if (std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c == 0; })) {
    throw DomainError("Thue form is zero");
  }
}

Integer ThueForm::operator()(const Integer& u, const Integer& v) const {
  // Horner in u with v-powers folded in from the top.
  Integer acc = 0, vpow = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc = acc * u + c_[c_.size() - 1 - i] * vpow;
    vpow *= v;
  }
  return acc;
}

ThueForm ThueForm::swapped() const { return ThueForm(std::vector<Integer>(c_.rbegin(), c_.rend())); }

std::string ThueForm::str() const {
  std::ostringstream os;
  const int n = degree();
  bool first = true;
  for (int i = n; i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Integer mag = abs(c);
    if (mag != 1) os << mag;
    if (i > 0) os << "u" << (i > 1 ? "^" + std::to_string(i) : "");
    if (n - i > 0) os << "v" << (n - i > 1 ? "^" + std::to_string(n - i) : "");
    if (mag == 1 && i == 0 && n == 0) os << 1;
  }
  return os.str();
}

namespace {

using Complex = std::complex<long double>;

// Durand-Kerner on F(x, 1), then Newton polishing.
std::vector<Complex> complex_roots(const std::vector<Integer>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<long double> a(c.size());
  const long double lead = c.back().get_d();
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = static_cast<long double>(c[i].get_d()) / lead;
  const auto eval = [&](Complex z) {
    Complex acc = a[n];
    for (std::size_t i = n; i-- > 0;) acc = acc * z + a[i];
    return acc;
  };
  const auto deriv = [&](Complex z) {
    Complex acc = static_cast<long double>(n) * a[n];
    for (std::size_t i = n; i-- > 1;) acc = acc * z + static_cast<long double>(i) * a[i];
    return acc;
  };
  long double radius = 1;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(a[i]));
  std::vector<Complex> z(n);
  const Complex seed(0.4L, 0.9L);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<int>(k)) * (radius / 2);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex denom = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (std::abs(denom) == 0) denom = 1e-30L;
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (change < 1e-18L) break;
  }
  for (auto& r : z) {
    for (int iter = 0; iter < 4; ++iter) {
      const Complex d = deriv(r);
      if (std::abs(d) == 0) break;
      r -= eval(r) / d;
    }
  }
  return z;
}

void finish(std::vector<IntPair>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

// v = 0: c_n u^n = m.
void axis_solutions(const ThueForm& f, const Integer& m, long box, std::vector<IntPair>& out) {
  const Integer& cn = f.coeffs().back();
  if (cn == 0) {
    if (m == 0) {
      for (long u = -box; u <= box; ++u) out.emplace_back(u, 0);
    }
    return;
  }
  if (m % cn != 0) return;
  Integer root;
  if (!exact_root(m / cn, static_cast<unsigned>(f.degree()), root)) return;
  if (abs(root) > box) return;
  out.emplace_back(root.get_si(), 0);
  if (f.degree() % 2 == 0) out.emplace_back(-root.get_si(), 0);
}

}  // namespace

std::vector<IntPair> thue_bounded_serial(const ThueForm& f, const Integer& m, long box) {
  if (box < 1) throw DomainError("Thue box must be at least 1");
  std::vector<IntPair> out;
  for (long u = -box; u <= box; ++u) {
    for (long v = -box; v <= box; ++v) {
      if (f(Integer(u), Integer(v)) == m) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<IntPair> thue_bounded(const ThueForm& f, const Integer& m, long box) {
  if (box < 1) throw DomainError("Thue box must be at least 1");
  const auto& c = f.coeffs();
  if (c.back() == 0) {
    if (c.front() == 0) return thue_bounded_serial(f, m, box);
    auto swapped = thue_bounded(f.swapped(), m, box);
    for (auto& [u, v] : swapped) std::swap(u, v);
    finish(swapped);
    return swapped;
  }

  const int n = f.degree();
  const auto roots = complex_roots(c);
  const long double reach =
      std::pow(std::abs(m.get_d()) / std::abs(c.back().get_d()), 1.0L / static_cast<long double>(n));

  std::vector<long double> cd;
  for (const auto& x : c) cd.push_back(static_cast<long double>(x.get_d()));
  const long double target = static_cast<long double>(m.get_d());
  // Rounding in the float evaluation stays far below 1e-12 of sum |c_i u^i v^(n-i)|.
  const auto may_hit = [&](long u, long v) {
    const long double lu = static_cast<long double>(u), lv = static_cast<long double>(v);
    long double value = cd.back(), size = std::abs(cd.back()), vp = 1;
    for (int i = n - 1; i >= 0; --i) {
      vp *= lv;
      const long double term = cd[static_cast<std::size_t>(i)] * vp;
      value = value * lu + term;
      size = size * std::abs(lu) + std::abs(term);
    }
    return std::abs(value - target) <= 1e-12L * (size + std::abs(target)) + 1;
  };

  std::vector<IntPair> out;
  axis_solutions(f, m, box, out);
#pragma omp parallel
  {
    std::vector<IntPair> local;
#pragma omp for schedule(static) nowait
    for (long v = -box; v <= box; ++v) {
      if (v == 0) continue;
      const long double lv = static_cast<long double>(v);
      std::vector<long> tried;
      for (const auto& alpha : roots) {
        const long double slack = reach + 1 + 1e-9L * std::abs(alpha) * std::abs(lv);
        if (std::abs(alpha.imag() * lv) > slack) continue;
        const long double centre = alpha.real() * lv;
        const long lo = std::max<long>(-box, static_cast<long>(std::ceil(centre - slack)));
        const long hi = std::min<long>(box, static_cast<long>(std::floor(centre + slack)));
        for (long u = lo; u <= hi; ++u) {
          if (std::find(tried.begin(), tried.end(), u) != tried.end()) continue;
          tried.push_back(u);
          if (may_hit(u, v) && f(Integer(u), Integer(v)) == m) local.emplace_back(u, v);
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  finish(out);
  return out;
}

namespace {

bool has_integer_coefficients(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c.is_integer(); });
}

Integer lcm_of_denominators(const QPoly& p, Integer acc) {
  for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.den().get_mpz_t());
  return acc;
}

Integer homogenize_at(const QPoly& p, int d, const Integer& m, const Integer& n) {
  Integer acc = 0, npow = 1;
  std::vector<Integer> npows(static_cast<std::size_t>(d) + 1);
  for (auto& x : npows) {
    x = npow;
    npow *= n;
  }
  Integer mpow = 1;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    acc += p.coeffs()[i].num() * mpow * npows[static_cast<std::size_t>(d) - i];
    mpow *= m;
  }
  return acc;
}

}  // namespace

GcdBoundCertificate gcd_bound(const QPoly& phi, const QPoly& psi) {
  if (phi.is_zero() || psi.is_zero()) throw DomainError("gcd bound needs nonzero polynomials");
  if (!has_integer_coefficients(phi) || !has_integer_coefficients(psi)) {
    throw DomainError("gcd bound needs integer coefficients");
  }
  const auto e = ext_gcd(phi, psi);
  if (e.d.degree() != 0) throw DomainError("polynomials share a complex root: gcd " + to_string(e.d));
  GcdBoundCertificate cert{phi, psi, e.s, e.t, Integer(1), phi.leading().num(), Integer(0)};
  cert.a = lcm_of_denominators(cert.g, lcm_of_denominators(cert.f, Integer(1)));
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), cert.a0.get_mpz_t(), static_cast<unsigned long>(phi.degree() + psi.degree()));
  cert.r = abs(cert.a * power);
  return cert;
}

Integer homogenized_gcd(const QPoly& phi, const QPoly& psi, const Integer& m, const Integer& n) {
  const int d = std::max(phi.degree(), psi.degree());
  Integer g;
  const Integer a = homogenize_at(phi, d, m, n), b = homogenize_at(psi, d, m, n);
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<Case3Solution> case3_divisor_solve(const Integer& bound) {
  std::vector<Case3Solution> out;
  for (const auto& pd : divisors(bound)) {
    for (int sd : {-1, 1}) {
      const Integer d = sd * pd;
      for (const auto& pc : cube_divisors(d)) {
        for (int sc : {-1, 1}) {
          const Integer d1 = sc * pc;
          Integer cube_root;
          exact_root(d1, 3, cube_root);
          const Integer e = d / d1;
          // u + v = cube_root, u - 3v = e
          const Integer four_v = cube_root - e;
          if (four_v % 4 != 0) continue;
          const Integer v = four_v / 4, u = cube_root - v;
          Integer g;
          mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
          if (g != 1) continue;
          Case3Solution s;
          s.u = u.get_si();
          s.v = v.get_si();
          s.d = d;
          s.d1 = d1;
          s.k = Rational(u * u * u * (-2 * u - 3 * v), d);
          out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Case3Solution& a, const Case3Solution& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

std::vector<IntPair> pell_bounded(long c, long box) {
  if (box < 1) throw DomainError("Pell box must be at least 1");
  std::vector<IntPair> out;
  for (long b = -box; b <= box; ++b) {
    const Integer sq = Integer(c) + 3 * Integer(b) * Integer(b);
    Integer a;
    if (sq < 0 || !exact_root(sq, 2, a) || a > box) continue;
    out.emplace_back(a.get_si(), b);
    if (a != 0) out.emplace_back(-a.get_si(), b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> k_from_16k2_27k(const Integer& m) {
  return rational_roots(QPoly({Rational(-m), Rational(27), Rational(16)}));
}

}  // namespace ckp
