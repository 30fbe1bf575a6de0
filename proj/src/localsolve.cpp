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

#include "ckpoints/localsolve.hpp"

#include <algorithm>

#include "ckpoints/errors.hpp"

namespace ckp {

void SuperellipticModel::validate() const {
  if (c == 0) throw DomainError("superelliptic model needs c != 0");
  if (e != 2 && e != 4) throw DomainError("exponent e must be 2 or 4");
  if (f.is_zero()) throw DomainError("superelliptic model needs f != 0");
  for (const auto& a : f.coeffs()) {
    if (!a.is_integer()) throw DomainError("f must have integer coefficients");
  }
}

std::string SuperellipticModel::str() const {
  const std::string lead = c == 1 ? "" : c == -1 ? "-" : c.get_str() + " ";
  return lead + "y^" + std::to_string(e) + " = " + to_string(f, "t");
}

std::string to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::kSoluble:
      return "soluble";
    case LocalStatus::kInsoluble:
      return "insoluble";
    case LocalStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

constexpr unsigned kInfinite = ~0U;

unsigned val(const Integer& n, const Integer& p) { return n == 0 ? kInfinite : valuation(n, p); }

Integer ipow(const Integer& p, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

class Search {
 public:
  Search(const SuperellipticModel& m, const Integer& p, unsigned cap)
      : model_(m), p_(p), cap_(cap), vc_(val(m.c, p)) {
    precision_ = 2 * val(Integer(m.e), p) + 1;
    if (val(Integer(m.e), p) == kInfinite) precision_ = 1;
    modulus_ = ipow(p, precision_);
  }

  // Explores t = a + p^r s for s in Z_p on polynomial h. Returns true as soon
  // as a solution is certified.
  bool explore(const QPoly& h, const Integer& a, unsigned r, bool at_infinity) {
    depth_used_ = std::max(depth_used_, r);
    const QPoly shifted = h.compose(QPoly({Rational(a), Rational(ipow(p_, r))}));
    const Integer f0 = shifted.coeff(0).num();
    if (f0 == 0) return found(at_infinity, a, Rational(0), r);
    const unsigned v0 = val(f0, p_);
    unsigned rest = kInfinite;
    for (std::size_t i = 1; i < shifted.coeffs().size(); ++i) {
      rest = std::min(rest, val(shifted.coeffs()[i].num(), p_));
    }

    // Simple root of h somewhere in Z_p: (root, 0) is a point.
    const Integer d0 = h.derivative().is_zero() ? Integer(0) : h.derivative()(Rational(a)).num();
    if (d0 != 0 && v0 != kInfinite && v0 > 2 * val(d0, p_)) return found(at_infinity, a, Rational(0), r);

    if (rest == kInfinite || rest >= v0 + precision_) {
      // Valuation and unit part are constant on the class.
      const long gap = static_cast<long>(v0) - static_cast<long>(vc_);
      if (gap % static_cast<long>(model_.e) != 0) return false;
      const Integer unit_f = f0 / ipow(p_, v0), unit_c = model_.c / ipow(p_, vc_);
      Integer root;
      if (!eth_root(unit_f, unit_c, root)) return false;
      const long shift = gap / static_cast<long>(model_.e);
      const Rational y = shift >= 0 ? Rational(root * ipow(p_, static_cast<unsigned>(shift)))
                                    : Rational(root, ipow(p_, static_cast<unsigned>(-shift)));
      return found(at_infinity, a, y, r, v0 + precision_);
    }
    if (r >= cap_) {
      exhausted_ = false;
      return false;
    }
    const Integer step = ipow(p_, r);
    for (Integer j = 0; j < p_; ++j) {
      if (explore(h, a + j * step, r + 1, at_infinity)) return true;
    }
    return false;
  }

  LocalVerdict verdict() const {
    LocalVerdict v;
    v.depth_used = depth_used_;
    v.witness = witness_;
    if (witness_) {
      v.status = LocalStatus::kSoluble;
    } else {
      v.status = exhausted_ ? LocalStatus::kInsoluble : LocalStatus::kUnknown;
    }
    return v;
  }

 private:
  // Some y with unit_c y^e = unit_f mod p^precision.
  bool eth_root(const Integer& unit_f, const Integer& unit_c, Integer& out) const {
    const Integer target = mod(unit_f, modulus_), scale = mod(unit_c, modulus_);
    for (Integer y = 1; y < modulus_; ++y) {
      if (mod(y, p_) == 0) continue;
      Integer ye;
      mpz_powm_ui(ye.get_mpz_t(), y.get_mpz_t(), model_.e, modulus_.get_mpz_t());
      if (mod(scale * ye, modulus_) == target) {
        out = y;
        return true;
      }
    }
    return false;
  }

  bool found(bool at_infinity, const Integer& t, const Rational& y, unsigned r, unsigned precision = 0) {
    witness_ = LocalWitness{at_infinity, t, y, precision == 0 ? r : precision};
    return true;
  }

  const SuperellipticModel& model_;
  Integer p_;
  unsigned cap_;
  unsigned vc_;
  unsigned precision_;
  Integer modulus_;
  unsigned depth_used_ = 0;
  bool exhausted_ = true;
  std::optional<LocalWitness> witness_;
};

}  // namespace

LocalVerdict qp_soluble(const SuperellipticModel& model, const Integer& p, unsigned depth_cap) {
  model.validate();
  if (p < 2 || !is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  if (depth_cap < 1) throw DomainError("depth cap must be at least 1");

  Search search(model, p, depth_cap);
  if (search.explore(model.f, Integer(0), 0, false)) return search.verdict();

  // u^(eN) f(1/u): reversed coefficients padded to degree eN.
  const unsigned n = (static_cast<unsigned>(model.f.degree()) + model.e - 1) / model.e;
  std::vector<Rational> rev(model.e * n + 1, Rational(0));
  for (std::size_t i = 0; i < model.f.coeffs().size(); ++i) rev[model.e * n - i] = model.f.coeffs()[i];
  search.explore(QPoly(std::move(rev)), Integer(0), 1, true);
  return search.verdict();
}

}  // namespace ckp
