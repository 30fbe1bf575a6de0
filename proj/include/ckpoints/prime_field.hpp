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

#include <cstdint>
#include <ostream>

#include "ckpoints/errors.hpp"
#include "ckpoints/polynomial.hpp"

namespace ckp {

/// Element of the prime field F_p; the modulus travels with the value.
/// Mixing elements of different fields is a DomainError.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
  static Fp from_signed(std::int64_t value, std::uint64_t p) {
    const auto m = static_cast<std::int64_t>(p);
    return {static_cast<std::uint64_t>(((value % m) + m) % m), p};
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    const std::uint64_t s = a.v_ + b.v_;
    return {s >= a.p_ ? s - a.p_ : s, a.p_};
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_};
  }
  Fp inverse() const;
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp pow(std::uint64_t e) const;
  /// Legendre symbol for odd p: 0, 1 or -1.
  int legendre() const;

 private:
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw DomainError("mixed prime fields");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

template <>
struct CoeffOps<Fp> {
  static Fp zero_like(const Fp& x) { return {0, x.modulus()}; }
  static Fp one_like(const Fp& x) { return {1, x.modulus()}; }
};

inline Fp scalar_like(long v, const Fp& sample) { return Fp::from_signed(v, sample.modulus()); }

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

using FpPoly = Polynomial<Fp>;

/// Reduces an integer polynomial modulo p.
FpPoly reduce_mod(const std::vector<Integer>& coeffs, std::uint64_t p);

}  // namespace ckp
