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

#include <ostream>
#include <string>

#include "ckpoints/polynomial.hpp"

namespace ckp {

/// Element of Q(t): coprime numerator and monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(Rational(1))) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}
  RationalFunction(const QPoly& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(QPoly::constant(Rational(1))) {}
  RationalFunction(QPoly num, QPoly den);

  /// The generator t.
  static RationalFunction t();

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at a rational point; DomainError at a pole.
  Rational evaluate(const Rational& t) const;

  RationalFunction operator-() const { return {-num_, den_, Normalized{}}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "t") const;

 private:
  struct Normalized {};
  RationalFunction(QPoly num, QPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

RationalFunction pow(const RationalFunction& base, int e);

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

using RF = RationalFunction;
using RFPoly = Polynomial<RationalFunction>;

}  // namespace ckp
