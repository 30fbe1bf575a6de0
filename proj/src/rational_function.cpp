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

#include "ckpoints/rational_function.hpp"

#include <sstream>

namespace ckp {

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(Rational(1));
    return;
  }
  const QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational scale = Rational(1) / den.leading();
  num_ = num * scale;
  den_ = den * scale;
}

RationalFunction RationalFunction::t() { return RationalFunction(qpoly({0, 1})); }

Rational RationalFunction::evaluate(const Rational& t) const {
  const Rational d = den_(t);
  if (d.is_zero()) throw DomainError("pole of rational function at t = " + t.str());
  return num_(t) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction pow(const RationalFunction& base, int e) {
  if (e < 0) return RationalFunction(1) / pow(base, -e);
  RationalFunction result(1);
  for (int i = 0; i < e; ++i) result = result * base;
  return result;
}

std::string RationalFunction::str(const std::string& var) const {
  std::ostringstream os;
  if (den_.degree() == 0) {
    os << to_string(num_, var);
  } else {
    os << "(" << to_string(num_, var) << ") / (" << to_string(den_, var) << ")";
  }
  return os.str();
}

}  // namespace ckp
