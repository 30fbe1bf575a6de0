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

#include <algorithm>

#include "ckpoints/polynomial.hpp"
#include "ckpoints/prime_field.hpp"

namespace ckp {

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1 || i == 0) out += c.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1) {
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

namespace {

Integer horner(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Integer horner_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

QPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(std::move(v));
}

// Integer roots of a monic, squarefree integer polynomial of degree >= 2:
// reduce modulo a prime where it stays squarefree, take the roots there and
// lift them p-adically past twice the Cauchy bound.
std::vector<Integer> integer_roots_monic_squarefree(const std::vector<Integer>& h) {
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) bound = std::max(bound, Integer(abs(h[i])));
  bound += 1;

  std::vector<Integer> deriv(h.size() - 1);
  for (std::size_t i = 1; i < h.size(); ++i) deriv[i - 1] = h[i] * static_cast<unsigned long>(i);

  static const std::vector<std::uint32_t> primes = primes_up_to(200000);
  for (std::uint32_t p : primes) {
    const FpPoly hp = reduce_mod(h, p);
    if (gcd(hp, hp.derivative()).degree() != 0) continue;

    std::vector<Integer> out;
    const Integer prime(p);
    for (std::uint64_t r = 0; r < p; ++r) {
      if (!hp(Fp(r, p)).is_zero()) continue;
      Integer root(static_cast<unsigned long>(r));
      Integer mod = prime;
      while (mod <= 2 * bound) {
        mod *= mod;
        Integer value = horner_mod(h, root, mod);
        Integer slope = horner_mod(deriv, root, mod);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), mod.get_mpz_t());
        root -= value * inv;
        mpz_mod(root.get_mpz_t(), root.get_mpz_t(), mod.get_mpz_t());
      }
      if (2 * root > mod) root -= mod;
      if (horner(h, root) == 0) out.push_back(root);
    }
    return out;
  }
  throw IntegrityError("no prime keeps the polynomial squarefree");
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Integer> c = primitive_integer_coeffs(p);
  std::vector<Rational> roots;

  const auto first_nonzero = std::find_if(c.begin(), c.end(), [](const Integer& v) { return v != 0; });
  if (first_nonzero != c.begin()) {
    roots.emplace_back(0);
    c.erase(c.begin(), first_nonzero);
  }
  if (c.size() >= 2) {
    QPoly f = from_integers(c);
    const QPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) c = primitive_integer_coeffs(exact_quotient(f, g));
  }
  const std::size_t n = c.size() - 1;
  if (n == 1) {
    roots.emplace_back(-c[0], c[1]);
  } else if (n >= 2) {
    const Integer lead = c[n];
    std::vector<Integer> h(n + 1);
    h[n] = 1;
    Integer scale = 1;
    for (std::size_t i = n; i-- > 0;) {
      h[i] = c[i] * scale;
      scale *= lead;
    }
    for (const auto& y : integer_roots_monic_squarefree(h)) roots.emplace_back(y, lead);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

QPoly resultant_in_y(const QPoly2& f, const QPoly2& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with a zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return QPoly::constant(Rational(1));

  std::vector<std::vector<QPoly>> a(size, std::vector<QPoly>(size));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j <= m; ++j) a[row][row + j] = f[m - j];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = 0; j <= n; ++j) a[n + row][row + j] = g[n - j];
  }

  // Fraction-free Bareiss elimination over Q[x].
  bool negate = false;
  QPoly previous = QPoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < size && a[swap][k].is_zero()) ++swap;
      if (swap == size) return {};
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
      }
      a[i][k] = QPoly{};
    }
    previous = a[k][k];
  }
  QPoly det = a[size - 1][size - 1];
  return negate ? -det : det;
}

Rational evaluate2(const QPoly2& f, const Rational& x0, const Rational& y0) {
  return specialize_x(f, x0)(y0);
}

QPoly specialize_x(const QPoly2& f, const Rational& x0) {
  std::vector<Rational> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(c(x0));
  return QPoly(std::move(v));
}

}  // namespace ckp
