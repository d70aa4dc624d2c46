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

#ifndef FMGAME_INEQUALITY_H_
#define FMGAME_INEQUALITY_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmgame/rational.h"

namespace fmgame {

// Input has the wrong dimensions (ragged matrix, vector length mismatch...).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// The implementation broke one of its own invariants. Never expected.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// coefficients . x <= rhs, together with the nonnegative multipliers y over
// the rows of the originating system (A0, b0) such that y^T A0 is the
// coefficient vector and y^T b0 is the rhs.
struct LinearInequality {
  RationalVector coefficients;
  Rational rhs;
  RationalVector certificate;

  bool IsZeroRow() const;

  friend bool operator==(const LinearInequality&,
                         const LinearInequality&) = default;
};

// Shape of the user-supplied system that all certificates refer to.
struct OriginDims {
  std::size_t rows = 0;
  std::size_t vars = 0;

  friend bool operator==(const OriginDims&, const OriginDims&) = default;
};

// Ordered list of inequalities over a fixed number of unknowns. Immutable
// once built; the constructor validates every row against num_vars and the
// origin's row count and rejects negative certificate entries.
class InequalitySystem {
 public:
  InequalitySystem(std::size_t num_vars, std::vector<LinearInequality> rows,
                   OriginDims origin);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<LinearInequality>& rows() const { return rows_; }
  const LinearInequality& row(std::size_t i) const { return rows_.at(i); }
  const OriginDims& origin() const { return origin_; }
  bool empty() const { return rows_.empty(); }

 private:
  std::size_t num_vars_;
  std::vector<LinearInequality> rows_;
  OriginDims origin_;
};

// Builds Ax <= b with row k certified by e_k. num_vars is taken from the rows
// of A; use the overload to build an empty system over n unknowns.
InequalitySystem NewSystem(const RationalMatrix& a, const RationalVector& b);
InequalitySystem NewSystem(std::size_t num_vars, const RationalMatrix& a,
                           const RationalVector& b);

struct SatisfactionReport {
  // rhs_i - coefficients_i . x, so row i holds iff slacks[i] >= 0.
  RationalVector slacks;
  bool satisfied = true;
};

SatisfactionReport Evaluate(const InequalitySystem& system,
                            const RationalVector& x);

// True iff the certificate y of system.row(row_index) is nonnegative and
// reproduces the row from `original`: y^T A0 == coefficients, y^T b0 == rhs.
// `original` must be the system the certificates refer to.
bool CheckCertificate(const InequalitySystem& system, std::size_t row_index,
                      const InequalitySystem& original);

// Scales the row by 1/|c| where c is its first nonzero coefficient. Zero rows
// are returned unchanged.
LinearInequality NormalizeRow(const LinearInequality& row);

}  // namespace fmgame

#endif  // FMGAME_INEQUALITY_H_
