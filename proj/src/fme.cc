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

#include "fmgame/fme.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace fmgame {
namespace {

void CheckVar(const InequalitySystem& system, std::size_t var,
              const char* caller) {
  if (var >= system.num_vars()) {
    throw std::out_of_range(std::string(caller) + ": variable " +
                            std::to_string(var) + " out of range for " +
                            std::to_string(system.num_vars()) + " unknowns");
  }
}

// weight_i * row_i + weight_j * row_j, with the pivot column forced to zero.
LinearInequality Combine(const LinearInequality& upper, const Rational& w_upper,
                         const LinearInequality& lower, const Rational& w_lower,
                         std::size_t var) {
  LinearInequality out;
  const std::size_t n = upper.coefficients.size();
  out.coefficients.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.coefficients.push_back(w_upper * upper.coefficients[k] +
                               w_lower * lower.coefficients[k]);
  }
  if (!out.coefficients[var].IsZero()) {
    throw InternalError("EliminateVariable: pivot column did not cancel");
  }
  out.rhs = w_upper * upper.rhs + w_lower * lower.rhs;
  const std::size_t m0 = upper.certificate.size();
  out.certificate.reserve(m0);
  for (std::size_t k = 0; k < m0; ++k) {
    out.certificate.push_back(w_upper * upper.certificate[k] +
                              w_lower * lower.certificate[k]);
  }
  return out;
}

std::size_t PairCount(const InequalitySystem& system, std::size_t var) {
  std::size_t positive = 0, negative = 0;
  for (const LinearInequality& row : system.rows()) {
    const int sign = row.coefficients[var].Sign();
    if (sign > 0) ++positive;
    if (sign < 0) ++negative;
  }
  return positive * negative;
}

}  // namespace

RowClassification ClassifyRows(const InequalitySystem& system,
                               std::size_t var) {
  CheckVar(system, var, "ClassifyRows");
  RowClassification classes;
  for (std::size_t i = 0; i < system.num_rows(); ++i) {
    const int sign = system.row(i).coefficients[var].Sign();
    if (sign > 0) {
      classes.positive.push_back(i);
    } else if (sign < 0) {
      classes.negative.push_back(i);
    } else {
      classes.zero.push_back(i);
    }
  }
  return classes;
}

InequalitySystem EliminateVariable(const InequalitySystem& system,
                                   std::size_t var) {
  const RowClassification classes = ClassifyRows(system, var);
  const std::size_t count =
      classes.zero.size() + classes.positive.size() * classes.negative.size();
  if (count > kMaxRowsPerLevel) {
    throw std::length_error("EliminateVariable: step would generate " +
                            std::to_string(count) + " rows (limit " +
                            std::to_string(kMaxRowsPerLevel) + ")");
  }
  std::vector<LinearInequality> rows;
  rows.reserve(count);
  for (std::size_t k : classes.zero) rows.push_back(system.row(k));
  for (std::size_t i : classes.positive) {
    const LinearInequality& upper = system.row(i);
    const Rational w_upper = upper.coefficients[var].Reciprocal();
    for (std::size_t j : classes.negative) {
      const LinearInequality& lower = system.row(j);
      const Rational w_lower = -lower.coefficients[var].Reciprocal();
      rows.push_back(Combine(upper, w_upper, lower, w_lower, var));
    }
  }
  return InequalitySystem(system.num_vars(), std::move(rows), system.origin());
}

InequalitySystem PruneRedundant(const InequalitySystem& system) {
  // Output slots in order; a slot holds either a kept contradiction or the
  // current best row of one normal-vector class.
  std::vector<LinearInequality> kept;
  std::map<RationalVector, std::size_t> class_slot;
  for (const LinearInequality& row : system.rows()) {
    if (row.IsZeroRow()) {
      if (row.rhs.Sign() < 0) kept.push_back(row);
      continue;
    }
    LinearInequality normalized = NormalizeRow(row);
    auto [it, inserted] =
        class_slot.try_emplace(normalized.coefficients, kept.size());
    if (inserted) {
      kept.push_back(std::move(normalized));
    } else if (normalized.rhs < kept[it->second].rhs) {
      kept[it->second] = std::move(normalized);
    }
  }
  return InequalitySystem(system.num_vars(), std::move(kept), system.origin());
}

EliminationTrace Project(const InequalitySystem& system,
                         const std::vector<std::size_t>& eliminate) {
  std::vector<std::size_t> remaining = eliminate;
  std::sort(remaining.begin(), remaining.end());
  if (std::adjacent_find(remaining.begin(), remaining.end()) !=
      remaining.end()) {
    throw PreconditionError("Project: duplicate variable index");
  }
  for (std::size_t var : remaining) CheckVar(system, var, "Project");

  EliminationTrace trace;
  trace.levels.push_back(system);
  while (!remaining.empty()) {
    const InequalitySystem& current = trace.levels.back();
    // `remaining` is sorted, so strict < keeps the lowest index on ties.
    auto best = remaining.begin();
    std::size_t best_pairs = PairCount(current, *best);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const std::size_t pairs = PairCount(current, *it);
      if (pairs < best_pairs) {
        best = it;
        best_pairs = pairs;
      }
    }
    const std::size_t var = *best;
    remaining.erase(best);
    trace.order.push_back(var);
    trace.levels.push_back(PruneRedundant(EliminateVariable(current, var)));
  }
  return trace;
}

bool HasContradiction(const InequalitySystem& system) {
  return std::any_of(system.rows().begin(), system.rows().end(),
                     [](const LinearInequality& row) {
                       return row.IsZeroRow() && row.rhs.Sign() < 0;
                     });
}

RationalVector BackSubstitute(const EliminationTrace& trace,
                              const RationalVector& partial) {
  if (trace.levels.size() != trace.order.size() + 1) {
    throw InternalError("BackSubstitute: malformed trace");
  }
  const InequalitySystem& final_level = trace.final_level();
  if (partial.size() != final_level.num_vars()) {
    throw ShapeError("BackSubstitute: partial assignment has " +
                     std::to_string(partial.size()) + " entries, expected " +
                     std::to_string(final_level.num_vars()));
  }
  RationalVector x = partial;
  for (std::size_t var : trace.order) x[var] = 0;
  if (!Evaluate(final_level, x).satisfied) {
    throw PreconditionError(
        "BackSubstitute: partial assignment violates the projected system");
  }

  for (std::size_t t = trace.order.size(); t-- > 0;) {
    const std::size_t var = trace.order[t];
    const InequalitySystem& level = trace.levels[t];
    std::optional<Rational> lower, upper;
    for (const LinearInequality& row : level.rows()) {
      const Rational& a = row.coefficients[var];
      if (a.IsZero()) continue;
      // a * x_var <= rhs - (rest . x), with x_var currently 0 in x.
      const Rational bound = (row.rhs - Dot(row.coefficients, x)) / a;
      if (a.Sign() > 0) {
        if (!upper || bound < *upper) upper = bound;
      } else {
        if (!lower || bound > *lower) lower = bound;
      }
    }
    if (lower && upper) {
      if (*upper < *lower) {
        throw InternalError("BackSubstitute: empty interval for variable " +
                            std::to_string(var));
      }
      x[var] = (*lower + *upper) / Rational(2);
    } else if (lower) {
      x[var] = *lower;
    } else if (upper) {
      x[var] = *upper;
    } else {
      x[var] = 0;
    }
  }
  return x;
}

}  // namespace fmgame
