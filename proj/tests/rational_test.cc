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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_util.h"

namespace fmgame {
namespace {

bool IsCanonical(const Rational& r) {
  if (r.denominator() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
          r.denominator().get_mpz_t());
  return g == 1;
}

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(6, 4).ToString() == "3/2");
  CHECK(Rational(3, -6).ToString() == "-1/2");
  CHECK(Rational(-4, -2).ToString() == "2");
  const Rational zero(0, -7);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero.ToString() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK(Rational(-5, 7).Abs() == Rational(5, 7));
  CHECK(Rational(-5, 7).Reciprocal() == Rational(-7, 5));
  CHECK_THROWS_AS(Rational(0).Reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("big integers do not overflow") {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(1L << 40);
  for (int i = 0; i < 100; ++i) x /= Rational(1L << 40);
  CHECK(x == Rational(1));
}

TEST_CASE("canonical form is closed under the field operations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::RandomRational(rng);
    const Rational b = testing::RandomRational(rng);
    CHECK(IsCanonical(a + b));
    CHECK(IsCanonical(a - b));
    CHECK(IsCanonical(a * b));
    CHECK(IsCanonical(-a));
    if (!b.IsZero()) {
      CHECK(IsCanonical(a / b));
      CHECK(IsCanonical(b.Reciprocal()));
    }
  }
}

TEST_CASE("ordering agrees with cross-multiplication") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::RandomRational(rng);
    const Rational b = testing::RandomRational(rng);
    const mpz_class lhs = a.numerator() * b.denominator();
    const mpz_class rhs = b.numerator() * a.denominator();
    CHECK((a < b) == (lhs < rhs));
    CHECK((a == b) == (lhs == rhs));
    // Exactly one of <, ==, > holds.
    CHECK(int(a < b) + int(a == b) + int(a > b) == 1);
  }
}

TEST_CASE("Dot rejects mismatched lengths") {
  CHECK(Dot(testing::Ints({1, 2}), testing::Ints({3, 4})) == Rational(11));
  CHECK_THROWS_AS(Dot(testing::Ints({1}), testing::Ints({1, 2})),
                  std::invalid_argument);
}

}  // namespace
}  // namespace fmgame
