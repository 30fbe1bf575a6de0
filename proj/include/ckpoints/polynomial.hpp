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

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ckpoints/errors.hpp"
#include "ckpoints/rational.hpp"

namespace ckp {

// Zero and one of a coefficient ring, taken from a sample element so that
// runtime-parametrised rings (prime fields) carry their modulus along.
template <class T>
struct CoeffOps {
  static T zero_like(const T&) { return T(0); }
  static T one_like(const T&) { return T(1); }
};

template <class T>
class Polynomial;

template <class T>
struct CoeffOps<Polynomial<T>> {
  static Polynomial<T> zero_like(const Polynomial<T>&) { return {}; }
  static Polynomial<T> one_like(const Polynomial<T>& p);
};

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial monomial(T c, std::size_t deg) {
    std::vector<T> v(deg + 1, CoeffOps<T>::zero_like(c));
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// The polynomial X over the ring of `sample`.
  static Polynomial x(const T& sample) {
    return Polynomial({CoeffOps<T>::zero_like(sample), CoeffOps<T>::one_like(sample)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  const T& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }
  /// Coefficient of X^i, zero past the degree (needs a nonzero polynomial).
  T coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return CoeffOps<T>::zero_like(leading());
  }

  template <class U>
  U evaluate(const U& x) const {
    if (c_.empty()) return CoeffOps<U>::zero_like(x);
    U acc = CoeffOps<U>::zero_like(x) + c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  T operator()(const T& x) const { return evaluate<T>(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T term = CoeffOps<T>::zero_like(c_[i]);
      for (std::size_t j = 0; j < i; ++j) term = term + c_[i];
      d.push_back(std::move(term));
    }
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& longer = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<T> v = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) v[i] = v[i] + shorter[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, CoeffOps<T>::zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const T& s) {
    std::vector<T> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Substitutes another polynomial for X.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Polynomial::constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
Polynomial<T> CoeffOps<Polynomial<T>>::one_like(const Polynomial<T>& p) {
  if (p.is_zero()) {
    throw DomainError("cannot infer coefficient ring from zero polynomial");
  }
  return Polynomial<T>::constant(CoeffOps<T>::one_like(p.leading()));
}

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, unsigned e) {
  if (base.is_zero()) {
    if (e == 0) throw DomainError("zero polynomial raised to the power 0");
    return base;
  }
  Polynomial<T> result = Polynomial<T>::constant(CoeffOps<T>::one_like(base.leading()));
  Polynomial<T> b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

/// Quotient and remainder over a field.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<F>{}, a};
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  const F inv_lead = CoeffOps<F>::one_like(b.leading()) / b.leading();
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), CoeffOps<F>::zero_like(b.leading()));
  for (int i = a.degree(); i >= db; --i) {
    const F& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    F q = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = r - q * b[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(i - db)] = std::move(q);
  }
  rem.erase(rem.begin() + db, rem.end());
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Divides and throws IntegrityError when the division is not exact.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw IntegrityError("polynomial division is not exact");
  return q;
}

template <class F>
Polynomial<F> make_monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  return p * (CoeffOps<F>::one_like(p.leading()) / p.leading());
}

/// Monic greatest common divisor over a field.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

template <class F>
struct ExtGcd {
  Polynomial<F> s;  // cofactor of f
  Polynomial<F> t;  // cofactor of g
  Polynomial<F> d;  // monic gcd
};

/// s*f + t*g = d with d the monic gcd. Throws DomainError if f = g = 0.
template <class F>
ExtGcd<F> ext_gcd(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("ext_gcd of two zero polynomials");
  const F sample = f.is_zero() ? g.leading() : f.leading();
  const auto one = Polynomial<F>::constant(CoeffOps<F>::one_like(sample));
  Polynomial<F> r0 = f, r1 = g;
  Polynomial<F> s0 = one, s1{};
  Polynomial<F> t0{}, t1 = one;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const F scale = CoeffOps<F>::one_like(sample) / r0.leading();
  return {s0 * scale, t0 * scale, r0 * scale};
}

template <class T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  return os << to_string(p);
}

using QPoly = Polynomial<Rational>;
using QPoly2 = Polynomial<QPoly>;  // polynomial in y with coefficients in Q[x]

/// Builds a Q[x] polynomial from integer coefficients, lowest degree first.
QPoly qpoly(std::initializer_list<long> coeffs);

/// Plain form, e.g. "t^3 - 2t + 1/2".
std::string to_string(const QPoly& p, const std::string& var = "x");

/// Multiplies by the lcm of denominators and divides by the content.
std::vector<Integer> primitive_integer_coeffs(const QPoly& p);

/// Exact rational roots, ascending, without multiplicity.
/// Throws DomainError for the zero polynomial.
std::vector<Rational> rational_roots(const QPoly& p);

/// Sylvester-determinant resultant with respect to y.
/// Throws DomainError if either input is zero.
QPoly resultant_in_y(const QPoly2& f, const QPoly2& g);

/// Evaluates a bivariate polynomial (in y over Q[x]) at (x0, y0).
Rational evaluate2(const QPoly2& f, const Rational& x0, const Rational& y0);

/// Specializes x = x0, leaving a polynomial in y.
QPoly specialize_x(const QPoly2& f, const Rational& x0);

}  // namespace ckp
