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

#ifndef FMGAME_FME_H_
#define FMGAME_FME_H_

#include <cstddef>
#include <vector>

#include "fmgame/inequality.h"
#include "fmgame/rational.h"

namespace fmgame {

// Partition of row indices by the sign of one variable's coefficient.
struct RowClassification {
  std::vector<std::size_t> positive;  // upper bounds on the variable
  std::vector<std::size_t> zero;      // rows not involving it
  std::vector<std::size_t> negative;  // lower bounds on the variable
};

// Throws std::out_of_range if var >= system.num_vars().
RowClassification ClassifyRows(const InequalitySystem& system, std::size_t var);

// Upper bound on the rows a single elimination step may generate. Beyond it
// EliminateVariable throws std::length_error instead of exhausting memory.
inline constexpr std::size_t kMaxRowsPerLevel = 1'000'000;

// One Fourier-Motzkin step. Rows not involving `var` are copied as-is, then
// for every upper-bound row i and lower-bound row j (in that nesting order)
// the row (1/a_i) row_i + (-1/a_j) row_j is appended, where a_i > 0 > a_j are
// their coefficients of `var`. The certificate is combined with the same
// positive weights. Column `var` is zero in every output row and the output
// has exactly |zero| + |positive| * |negative| rows. No pruning.
// Throws std::length_error if that count exceeds kMaxRowsPerLevel.
InequalitySystem EliminateVariable(const InequalitySystem& system,
                                   std::size_t var);

// Syntactic cleanup that keeps the solution set:
//  - nonzero rows are normalized, and among rows with the same normalized
//    coefficient vector only the one with the smallest rhs survives (first
//    one on ties), in the position of the first row of that class;
//  - zero rows 0 <= rhs with rhs >= 0 are dropped;
//  - zero rows with rhs < 0 are all kept unchanged.
InequalitySystem PruneRedundant(const InequalitySystem& system);

// Intermediate systems of a projection. levels[0] is the input and
// levels[t] is the pruned system after eliminating order[0..t-1]. Columns are
// never removed, so variable indices are stable across levels.
struct EliminationTrace {
  std::vector<std::size_t> order;
  std::vector<InequalitySystem> levels;

  const InequalitySystem& input() const { return levels.front(); }
  const InequalitySystem& final_level() const { return levels.back(); }
};

// Eliminates every variable in `eliminate`. At each step the remaining
// requested variable with the fewest generated pairs |G|*|L| goes first, ties
// to the lowest index. Throws PreconditionError on duplicate indices and
// std::out_of_range on indices >= num_vars.
EliminationTrace Project(const InequalitySystem& system,
                         const std::vector<std::size_t>& eliminate);

// True iff the final level holds a row 0 <= rhs with rhs < 0.
bool HasContradiction(const InequalitySystem& system);

// Extends a point of the final level to a point of the input system.
// `partial` has one entry per variable; entries of eliminated variables are
// ignored. Each eliminated variable, last-eliminated first, is set to the
// midpoint of [max lower bound, min upper bound] at the already-fixed values,
// to the single bound if only one side exists, or to 0 if unconstrained.
// Throws PreconditionError if `partial` violates the final level.
RationalVector BackSubstitute(const EliminationTrace& trace,
                              const RationalVector& partial);

}  // namespace fmgame

#endif  // FMGAME_FME_H_
