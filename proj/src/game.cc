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

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "fmgame/fme.h"

namespace fmgame {
namespace {

bool IsDistribution(const RationalVector& x) {
  Rational total;
  for (const Rational& xi : x) {
    if (xi.Sign() < 0) return false;
    total += xi;
  }
  return total == 1;
}

bool AllNonnegative(const RationalVector& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Rational& xi) { return xi.Sign() >= 0; });
}

// p^T A - s^T + (delta - epsilon) 1^T == 0^T, delta - epsilon == -v and
// every component of the multiplier is nonnegative.
bool MultiplierIdentitiesHold(const GameMatrix& game,
                              const GameSolution& solution) {
  if (!AllNonnegative(solution.multiplier)) return false;
  const Rational net = solution.delta() - solution.epsilon();
  if (net != -solution.value) return false;
  const RationalVector s = solution.slack();
  for (std::size_t j = 0; j < game.cols(); ++j) {
    Rational column = net - s[j];
    for (std::size_t i = 0; i < game.rows(); ++i) {
      column += solution.p[i] * game.at(i, j);
    }
    if (!column.IsZero()) return false;
  }
  return true;
}

}  // namespace

GameMatrix::GameMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) {
    throw ShapeError("GameMatrix: need at least one row and one column");
  }
  for (const RationalVector& row : entries_) {
    if (row.size() != entries_.front().size()) {
      throw ShapeError("GameMatrix: rows have different lengths");
    }
  }
}

GameMatrix GameMatrix::SwapPlayers() const {
  RationalMatrix swapped(cols(), RationalVector(rows()));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) swapped[j][i] = -entries_[i][j];
  }
  return GameMatrix(std::move(swapped));
}

GameMatrix GameMatrix::Affine(const Rational& scale,
                              const Rational& shift) const {
  RationalMatrix out = entries_;
  for (RationalVector& row : out) {
    for (Rational& a : row) a = scale * a + shift;
  }
  return GameMatrix(std::move(out));
}

RationalVector GameSolution::slack() const {
  const std::size_t m = p.size();
  return RationalVector(multiplier.begin() + m,
                        multiplier.begin() + m + q.size());
}

const Rational& GameSolution::delta() const {
  return multiplier[p.size() + q.size()];
}

const Rational& GameSolution::epsilon() const {
  return multiplier[p.size() + q.size() + 1];
}

InequalitySystem BuildGameSystem(const GameMatrix& game) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  RationalMatrix a;
  RationalVector b;
  a.reserve(m + n + 2);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row = game.entries()[i];
    row.push_back(-1);
    a.push_back(std::move(row));
    b.push_back(0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(n + 1);
    row[j] = -1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  RationalVector sum_row(n, Rational(1));
  sum_row.push_back(0);
  a.push_back(sum_row);
  b.push_back(1);
  for (Rational& c : sum_row) c = -c;
  a.push_back(std::move(sum_row));
  b.push_back(-1);
  return NewSystem(n + 1, a, b);
}

GameSolution SolveGame(const GameMatrix& game) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  const std::size_t v_index = n;

  const InequalitySystem system = BuildGameSystem(game);
  std::vector<std::size_t> strategy_vars(n);
  std::iota(strategy_vars.begin(), strategy_vars.end(), 0);
  const EliminationTrace trace = Project(system, strategy_vars);
  const InequalitySystem& projected = trace.final_level();

  // Rows alpha v <= beta. The largest lower bound beta / alpha over alpha < 0
  // is the smallest feasible v.
  std::optional<std::size_t> best_row;
  Rational best_bound;
  for (std::size_t i = 0; i < projected.num_rows(); ++i) {
    const LinearInequality& row = projected.row(i);
    const Rational& alpha = row.coefficients[v_index];
    if (alpha.Sign() >= 0) continue;
    Rational bound = row.rhs / alpha;
    if (!best_row || bound > best_bound) {
      best_row = i;
      best_bound = std::move(bound);
    }
  }
  if (!best_row) {
    throw InternalError("SolveGame: projected system has no lower bound on v");
  }

  GameSolution solution;
  solution.value = best_bound;
  const LinearInequality& tight = projected.row(*best_row);
  const Rational rescale = -tight.coefficients[v_index].Reciprocal();
  solution.multiplier.reserve(tight.certificate.size());
  for (const Rational& y : tight.certificate) {
    solution.multiplier.push_back(y * rescale);
  }
  solution.p.assign(solution.multiplier.begin(),
                    solution.multiplier.begin() + m);

  RationalVector partial(n + 1);
  partial[v_index] = solution.value;
  const RationalVector full = BackSubstitute(trace, partial);
  solution.q.assign(full.begin(), full.begin() + n);

  if (!MultiplierIdentitiesHold(game, solution)) {
    throw InternalError("SolveGame: multiplier identities do not hold");
  }
  if (!VerifySolution(game, solution.p, solution.q, solution.value)) {
    throw InternalError("SolveGame: solution failed verification");
  }
  return solution;
}

bool VerifySolution(const GameMatrix& game, const RationalVector& p,
                    const RationalVector& q, const Rational& v) {
  if (p.size() != game.rows() || q.size() != game.cols()) {
    throw ShapeError("VerifySolution: strategy lengths " +
                     std::to_string(p.size()) + " and " +
                     std::to_string(q.size()) + " do not match a " +
                     std::to_string(game.rows()) + "x" +
                     std::to_string(game.cols()) + " game");
  }
  if (!IsDistribution(p) || !IsDistribution(q)) return false;
  for (std::size_t j = 0; j < game.cols(); ++j) {
    Rational payoff;
    for (std::size_t i = 0; i < game.rows(); ++i) payoff += p[i] * game.at(i, j);
    if (payoff < v) return false;
  }
  for (std::size_t i = 0; i < game.rows(); ++i) {
    if (Dot(game.entries()[i], q) > v) return false;
  }
  return true;
}

}  // namespace fmgame
