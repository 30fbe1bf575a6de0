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

#include "ckpoints/prime_field.hpp"

#include <string>
#include <utility>

namespace ckp {

Fp Fp::pow(std::uint64_t e) const {
  Fp result(1, p_);
  Fp b = *this;
  while (e != 0) {
    if (e & 1U) result = result * b;
    b = b * b;
    e >>= 1U;
  }
  return result;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in F_p");
  // Extended Euclid; p need not be checked for primality here.
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("element not invertible modulo " + std::to_string(p_));
  return from_signed(t, p_);
}

int Fp::legendre() const {
  if (v_ == 0) return 0;
  return pow((p_ - 1) / 2).v_ == 1 ? 1 : -1;
}

FpPoly reduce_mod(const std::vector<Integer>& coeffs, std::uint64_t p) {
  std::vector<Fp> out;
  out.reserve(coeffs.size());
  const Integer mod(static_cast<unsigned long>(p));
  for (const auto& c : coeffs) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    out.emplace_back(r.get_ui(), p);
  }
  return FpPoly(std::move(out));
}

}  // namespace ckp
