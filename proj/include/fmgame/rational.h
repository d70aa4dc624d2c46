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

#ifndef FMGAME_RATIONAL_H_
#define FMGAME_RATIONAL_H_

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fmgame {

// Exact fraction of arbitrary-precision integers. Always kept in canonical
// form: the denominator is positive, numerator and denominator are coprime,
// and zero is 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return denominator() == 1; }

  Rational Abs() const;
  // Throws std::domain_error on zero.
  Rational Reciprocal() const;

  // "num/den", or just "num" when the denominator is one.
  std::string ToString() const;
  // Nearest double; only for labelled approximate output.
  double ToDouble() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error when dividing by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Sum of a[i] * b[i]. Throws std::invalid_argument on a length mismatch.
Rational Dot(const RationalVector& a, const RationalVector& b);

}  // namespace fmgame

#endif  // FMGAME_RATIONAL_H_
