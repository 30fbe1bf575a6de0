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

#include "ckpoints/integer.hpp"

#include <algorithm>
#include <cstdint>

#include "ckpoints/errors.hpp"

namespace ckp {
namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

// Brent's variant of Pollard rho; n composite, odd, not a perfect power.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    unsigned long r = 1;
    auto f = [&](const Integer& v) -> Integer {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += 128;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        d = abs(d);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer m = abs(n);
  if (m > kFactorCap) {
    throw DomainError("integer " + n.get_str() + " exceeds the factorization cap 10^18");
  }
  std::vector<std::pair<Integer, unsigned>> out;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(Integer(p), e);
  }
  if (m > 1) {
    // Every prime factor of m now exceeds min(sqrt(m), 10^6), and m <= 10^18,
    // so m is a prime, the square of a prime, or a product of two primes.
    if (is_prime(m)) {
      out.emplace_back(m, 1);
    } else {
      Integer r;
      if (exact_root(m, 2, r)) {
        out.emplace_back(r, 2);
      } else {
        Integer a = pollard_rho(m);
        Integer b = m / a;
        if (a > b) std::swap(a, b);
        out.emplace_back(a, 1);
        out.emplace_back(b, 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Divisors built from per-prime exponents chosen in steps of `step`.
std::vector<Integer> divisors_with_step(const Integer& n, unsigned step, bool root) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t count = out.size();
    Integer pk = 1;
    Integer unit = root ? p : Integer(0);
    if (!root) mpz_pow_ui(unit.get_mpz_t(), p.get_mpz_t(), step);
    for (unsigned k = step; k <= e; k += step) {
      pk *= unit;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Integer> divisors(const Integer& n) { return divisors_with_step(n, 1, false); }

std::vector<Integer> cube_divisors(const Integer& n) { return divisors_with_step(n, 3, false); }

std::vector<Integer> square_root_divisors(const Integer& n) { return divisors_with_step(n, 2, true); }

bool exact_root(const Integer& n, unsigned r, Integer& out) {
  if (r == 0) throw DomainError("zeroth root");
  if (n < 0 && r % 2 == 0) return false;
  Integer m = abs(n);
  const bool exact = mpz_root(out.get_mpz_t(), m.get_mpz_t(), r) != 0;
  if (n < 0) out = -out;
  return exact;
}

}  // namespace ckp
