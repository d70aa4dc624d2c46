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

#include "fmgame/game.h"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fmgame/oracles.h"
#include "test_util.h"

namespace fmgame {
namespace {

using testing::IntMatrix;
using testing::Ints;

RationalVector Fractions(std::initializer_list<std::pair<long, long>> values) {
  RationalVector out;
  for (auto [num, den] : values) out.emplace_back(num, den);
  return out;
}

TEST_CASE("GameMatrix validates its shape") {
  CHECK_THROWS_AS(GameMatrix(RationalMatrix{}), ShapeError);
  CHECK_THROWS_AS(GameMatrix(RationalMatrix(1)), ShapeError);
  CHECK_THROWS_AS(GameMatrix(IntMatrix({{1, 2}, {3}})), ShapeError);
  const GameMatrix g(IntMatrix({{1, 2, 3}, {4, 5, 6}}));
  CHECK(g.SwapPlayers().entries() == IntMatrix({{-1, -4}, {-2, -5}, {-3, -6}}));
  CHECK(g.Affine(Rational(2), Rational(-1)).entries() ==
        IntMatrix({{1, 3, 5}, {7, 9, 11}}));
}

TEST_CASE("BuildGameSystem stacks the player-2 constraints") {
  const InequalitySystem s = BuildGameSystem(GameMatrix(IntMatrix({{1, -1}, {-1, 1}})));
  CHECK(s.num_rows() == 6);
  CHECK(s.num_vars() == 3);
  const RationalMatrix expected = IntMatrix(
      {{1, -1, -1}, {-1, 1, -1}, {-1, 0, 0}, {0, -1, 0}, {1, 1, 0}, {-1, -1, 0}});
  for (std::size_t i = 0; i < 6; ++i) CHECK(s.row(i).coefficients == expected[i]);
  const RationalVector rhs = Ints({0, 0, 0, 0, 1, -1});
  for (std::size_t i = 0; i < 6; ++i) CHECK(s.row(i).rhs == rhs[i]);

  const InequalitySystem one = BuildGameSystem(GameMatrix(IntMatrix({{5}})));
  CHECK(one.num_rows() == 4);
  const RationalMatrix one_expected = IntMatrix({{5, -1}, {-1, 0}, {1, 0}, {-1, 0}});
  for (std::size_t i = 0; i < 4; ++i) CHECK(one.row(i).coefficients == one_expected[i]);
}

TEST_CASE("BuildGameSystem shape law") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const GameMatrix g = testing::RandomGame(rng, 6, -5, 5);
    const InequalitySystem s = BuildGameSystem(g);
    CHECK(s.num_rows() == g.rows() + g.cols() + 2);
    CHECK(s.num_vars() == g.cols() + 1);
  }
}

TEST_CASE("SolveGame on a 2x2 game without a saddle") {
  const GameSolution sol = SolveGame(GameMatrix(IntMatrix({{3, 0}, {1, 2}})));
  CHECK(sol.value == Rational(3, 2));
  CHECK(sol.p == Fractions({{1, 4}, {3, 4}}));
  CHECK(sol.q == Fractions({{1, 2}, {1, 2}}));
  CHECK(sol.multiplier.size() == 2 + 2 + 2);
}

TEST_CASE("SolveGame on matching pennies") {
  const GameSolution sol = SolveGame(GameMatrix(IntMatrix({{1, -1}, {-1, 1}})));
  CHECK(sol.value == Rational(0));
  CHECK(sol.p == Fractions({{1, 2}, {1, 2}}));
  CHECK(sol.q == Fractions({{1, 2}, {1, 2}}));
}

TEST_CASE("SolveGame on a 1x1 game") {
  const GameSolution sol = SolveGame(GameMatrix(IntMatrix({{5}})));
  CHECK(sol.value == Rational(5));
  CHECK(sol.p == Ints({1}));
  CHECK(sol.q == Ints({1}));
}

TEST_CASE("SolveGame on a game with a pure saddle") {
  const GameMatrix g(IntMatrix({{2, 1}, {0, 1}}));
  const GameSolution sol = SolveGame(g);
  CHECK(sol.value == Rational(1));
  CHECK(VerifySolution(g, sol.p, sol.q, sol.value));
}

TEST_CASE("SolveGame with fractional payoffs") {
  const GameMatrix g({{Rational(1, 2), Rational(-1, 3)}, {Rational(-1, 4), Rational(2, 5)}});
  const GameSolution sol = SolveGame(g);
  const TwoByTwoSolution oracle = Solve2x2Oracle(g);
  CHECK(sol.value == oracle.value);
  CHECK(sol.p == oracle.p);
  CHECK(sol.q == oracle.q);
}

TEST_CASE("VerifySolution") {
  const GameMatrix g(IntMatrix({{3, 0}, {1, 2}}));
  CHECK(VerifySolution(g, Fractions({{1, 4}, {3, 4}}), Fractions({{1, 2}, {1, 2}}),
                       Rational(3, 2)));
  CHECK_FALSE(VerifySolution(g, Ints({1, 0}), Fractions({{1, 2}, {1, 2}}),
                             Rational(3, 2)));
  // Right strategies, wrong value.
  CHECK_FALSE(VerifySolution(g, Fractions({{1, 4}, {3, 4}}),
                             Fractions({{1, 2}, {1, 2}}), Rational(1)));
  // Not a distribution.
  CHECK_FALSE(VerifySolution(g, Fractions({{1, 2}, {3, 4}}),
                             Fractions({{1, 2}, {1, 2}}), Rational(3, 2)));
  CHECK_FALSE(VerifySolution(g, Ints({2, -1}), Fractions({{1, 2}, {1, 2}}),
                             Rational(3, 2)));
  CHECK(VerifySolution(GameMatrix(IntMatrix({{5}})), Ints({1}), Ints({1}), Rational(5)));
  CHECK_THROWS_AS(VerifySolution(g, Ints({1}), Ints({1, 0}), Rational(0)), ShapeError);
}

TEST_CASE("property: solutions certify themselves") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const GameMatrix g = testing::RandomGame(rng, 4, -5, 5);
    const GameSolution sol = SolveGame(g);
    CHECK(VerifySolution(g, sol.p, sol.q, sol.value));

    // p^T A = s^T + v 1^T with s >= 0, and delta - epsilon = -v.
    const RationalVector s = sol.slack();
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rational column;
      for (std::size_t i = 0; i < g.rows(); ++i) column += sol.p[i] * g.at(i, j);
      CHECK(column == s[j] + sol.value);
      CHECK(s[j].Sign() >= 0);
    }
    CHECK(sol.delta() - sol.epsilon() == -sol.value);
    CHECK(sol.delta().Sign() >= 0);
    CHECK(sol.epsilon().Sign() >= 0);

    CHECK(MaxMin(g) <= sol.value);
    CHECK(sol.value <= MinMax(g));
    CHECK(SolveGame(g.SwapPlayers()).value == -sol.value);
    CHECK(SolveGame(g.Affine(Rational(3, 2), Rational(-2))).value ==
          Rational(3, 2) * sol.value - Rational(2));
  }
}

TEST_CASE("5x5 diagonal game matches its closed form") {
  // For positive a_i on the diagonal, v = 1 / sum(1/a_i) and both players
  // play action i with probability v / a_i.
  RationalMatrix a(5, RationalVector(5));
  Rational inverse_sum;
  for (long i = 0; i < 5; ++i) {
    a[i][i] = i + 1;
    inverse_sum += Rational(1, i + 1);
  }
  const Rational value = inverse_sum.Reciprocal();
  CHECK(value == Rational(60, 137));
  const GameSolution sol = SolveGame(GameMatrix(a));
  CHECK(sol.value == value);
  for (long i = 0; i < 5; ++i) {
    CHECK(sol.p[i] == value / Rational(i + 1));
    CHECK(sol.q[i] == value / Rational(i + 1));
  }
}

TEST_CASE("rock-paper-scissors-lizard-Spock") {
  // Each action beats the actions one and three steps ahead of it (mod 5).
  RationalMatrix a(5, RationalVector(5));
  for (long i = 0; i < 5; ++i) {
    for (long step : {1L, 3L}) {
      a[i][(i + step) % 5] = 1;
      a[(i + step) % 5][i] = -1;
    }
  }
  const GameSolution sol = SolveGame(GameMatrix(a));
  CHECK(sol.value == Rational(0));
  for (long i = 0; i < 5; ++i) {
    CHECK(sol.p[i] == Rational(1, 5));
    CHECK(sol.q[i] == Rational(1, 5));
  }
}

TEST_CASE("oversized eliminations fail cleanly") {
  // A dense 6x6 game generates several hundred million rows in the last step.
  std::mt19937 rng(43);
  const GameMatrix g(testing::RandomIntMatrix(rng, 6, 6, -9, 9));
  CHECK_THROWS_AS(SolveGame(g), std::length_error);
}

}  // namespace
}  // namespace fmgame
