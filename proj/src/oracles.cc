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

#include "fmgame/oracles.h"

#include <algorithm>
#include <stdexcept>

namespace fmgame {

std::optional<SaddlePoint> PureSaddleOracle(const GameMatrix& game) {
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      const Rational& a = game.at(i, j);
      bool saddle = true;
      for (std::size_t k = 0; k < game.cols() && saddle; ++k) {
        if (game.at(i, k) < a) saddle = false;
      }
      for (std::size_t k = 0; k < game.rows() && saddle; ++k) {
        if (game.at(k, j) > a) saddle = false;
      }
      if (saddle) return SaddlePoint{i, j, a};
    }
  }
  return std::nullopt;
}

TwoByTwoSolution Solve2x2Oracle(const GameMatrix& game) {
  if (game.rows() != 2 || game.cols() != 2) {
    throw ShapeError("Solve2x2Oracle: game is not 2x2");
  }
  TwoByTwoSolution out;
  if (auto saddle = PureSaddleOracle(game)) {
    out.p = {0, 0};
    out.q = {0, 0};
    out.p[saddle->row] = 1;
    out.q[saddle->col] = 1;
    out.value = saddle->value;
    return out;
  }
  const Rational& a11 = game.at(0, 0);
  const Rational& a12 = game.at(0, 1);
  const Rational& a21 = game.at(1, 0);
  const Rational& a22 = game.at(1, 1);
  // Nonzero whenever there is no saddle.
  const Rational delta = a11 + a22 - a12 - a21;
  out.value = (a11 * a22 - a12 * a21) / delta;
  out.p = {(a22 - a21) / delta, (a11 - a12) / delta};
  out.q = {(a22 - a12) / delta, (a11 - a21) / delta};
  out.completely_mixed = true;
  return out;
}

Rational MaxMin(const GameMatrix& game) {
  std::optional<Rational> best;
  for (const RationalVector& row : game.entries()) {
    const Rational worst = *std::min_element(row.begin(), row.end());
    if (!best || worst > *best) best = worst;
  }
  return *best;
}

Rational MinMax(const GameMatrix& game) {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < game.cols(); ++j) {
    Rational worst = game.at(0, j);
    for (std::size_t i = 1; i < game.rows(); ++i) {
      worst = std::max(worst, game.at(i, j));
    }
    if (!best || worst < *best) best = worst;
  }
  return *best;
}

std::vector<RationalVector> GridFeasibilityOracle(const InequalitySystem& system,
                                                  long lo, long hi,
                                                  long denominator) {
  if (denominator <= 0 || lo > hi) {
    throw std::invalid_argument("GridFeasibilityOracle: empty grid");
  }
  const std::size_t n = system.num_vars();
  const long first = lo * denominator;
  const long last = hi * denominator;
  std::vector<long> ticks(n, first);
  std::vector<RationalVector> found;
  while (true) {
    RationalVector x;
    x.reserve(n);
    for (long t : ticks) x.emplace_back(t, denominator);
    bool ok = true;
    for (const LinearInequality& row : system.rows()) {
      Rational lhs;
      for (std::size_t k = 0; k < n; ++k) lhs += row.coefficients[k] * x[k];
      if (lhs > row.rhs) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(std::move(x));
    // Odometer increment, last coordinate fastest.
    std::size_t k = n;
    while (k > 0 && ticks[k - 1] == last) ticks[--k] = first;
    if (k == 0) break;
    ++ticks[k - 1];
  }
  return found;
}

}  // namespace fmgame
