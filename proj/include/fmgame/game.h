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

#ifndef FMGAME_GAME_H_
#define FMGAME_GAME_H_

#include <cstddef>

#include "fmgame/inequality.h"
#include "fmgame/rational.h"

namespace fmgame {

// Payoff matrix of a two-player zero-sum game: entry (i, j) is paid by the
// column player to the row player. At least one row and one column.
class GameMatrix {
 public:
  // Throws ShapeError if the matrix is empty or ragged.
  explicit GameMatrix(RationalMatrix entries);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return entries_.front().size(); }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i][j];
  }
  const RationalMatrix& entries() const { return entries_; }

  // -A^T: the same game seen from the column player's side.
  GameMatrix SwapPlayers() const;
  // scale * A + shift * J.
  GameMatrix Affine(const Rational& scale, const Rational& shift) const;

 private:
  RationalMatrix entries_;
};

struct GameSolution {
  RationalVector p;  // row player's optimal mixed strategy
  RationalVector q;  // column player's optimal mixed strategy
  Rational value;

  // The multiplier y = (p, s, delta, epsilon) over the rows of the stacked
  // system that combines to -v <= -value. Satisfies p^T A = s^T + value 1^T
  // and delta - epsilon = -value.
  RationalVector multiplier;

  RationalVector slack() const;     // s
  const Rational& delta() const;    // weight on 1^T q <= 1
  const Rational& epsilon() const;  // weight on -1^T q <= -1
};

// The system over (q_1..q_n, v) with rows [A | -1] <= 0, [-I | 0] <= 0,
// [1^T | 0] <= 1 and [-1^T | 0] <= -1, in that order.
InequalitySystem BuildGameSystem(const GameMatrix& game);

// Value and optimal strategies by projecting the stacked system onto v.
// The returned solution has passed VerifySolution and the multiplier
// identities; any failure there throws InternalError instead.
GameSolution SolveGame(const GameMatrix& game);

// Exact check that p and q are mixed strategies with p^T A >= v 1^T and
// A q <= v 1. When it holds, v is the value of the game and p, q are optimal.
// Throws ShapeError if p or q has the wrong length.
bool VerifySolution(const GameMatrix& game, const RationalVector& p,
                    const RationalVector& q, const Rational& v);

}  // namespace fmgame

#endif  // FMGAME_GAME_H_
