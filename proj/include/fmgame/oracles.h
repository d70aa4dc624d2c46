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

#ifndef FMGAME_ORACLES_H_
#define FMGAME_ORACLES_H_

// Naive references for testing. Nothing here calls into the elimination
// engine or the game solver.

#include <cstddef>
#include <optional>
#include <vector>

#include "fmgame/game.h"
#include "fmgame/inequality.h"
#include "fmgame/rational.h"

namespace fmgame {

struct SaddlePoint {
  std::size_t row;
  std::size_t col;
  Rational value;
};

// First (row-major) entry that is the minimum of its row and the maximum of
// its column, if any.
std::optional<SaddlePoint> PureSaddleOracle(const GameMatrix& game);

struct TwoByTwoSolution {
  RationalVector p;
  RationalVector q;
  Rational value;
  // No pure saddle, so the optimum is unique and uses both actions of each
  // player.
  bool completely_mixed = false;
};

// Closed-form solution of a 2x2 game. Throws ShapeError for other sizes.
TwoByTwoSolution Solve2x2Oracle(const GameMatrix& game);

// max_i min_j a_ij and min_j max_i a_ij: the bounds any value lies between.
Rational MaxMin(const GameMatrix& game);
Rational MinMax(const GameMatrix& game);

// Every point with coordinates k / denominator inside [lo, hi]^n that
// satisfies the system, in lexicographic order.
std::vector<RationalVector> GridFeasibilityOracle(const InequalitySystem& system,
                                                  long lo, long hi,
                                                  long denominator);

}  // namespace fmgame

#endif  // FMGAME_ORACLES_H_
