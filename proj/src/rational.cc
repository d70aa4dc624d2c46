// Copyright 2026 The fmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmgame/rational.h"

#include <stdexcept>

namespace fmgame {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::Abs() const { return Rational(mpq_class(abs(value_))); }

Rational Rational::Reciprocal() const {
  if (IsZero()) throw std::domain_error("Rational: reciprocal of zero");
  mpq_class inverse(value_.get_den(), value_.get_num());
  inverse.canonicalize();
  return Rational(std::move(inverse));
}

std::string Rational::ToString() const {
  if (IsInteger()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) throw std::domain_error("Rational: division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Dot: length mismatch");
  }
  Rational sum;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace fmgame
