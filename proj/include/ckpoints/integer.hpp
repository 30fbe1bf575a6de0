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

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace ckp {

using Integer = mpz_class;

/// Largest |n| accepted by the factorization helpers.
inline const Integer kFactorCap{"1000000000000000000"};

/// Prime factorization of |n| as (prime, exponent) pairs, ascending.
/// Trial division handles all primes below 10^6; a cofactor above that
/// has at most two prime factors and is split with Pollard rho.
/// Throws DomainError for n = 0 or |n| > kFactorCap.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// Positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Positive divisors of |n| that are perfect cubes, ascending.
std::vector<Integer> cube_divisors(const Integer& n);

/// All y >= 1 with y^2 dividing |n|, ascending.
std::vector<Integer> square_root_divisors(const Integer& n);

/// Exact integer r-th root if one exists (sign handled for odd r).
bool exact_root(const Integer& n, unsigned r, Integer& out);

/// Primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

bool is_prime(const Integer& n);

/// p-adic valuation of nonzero n.
unsigned valuation(const Integer& n, const Integer& p);

}  // namespace ckp
