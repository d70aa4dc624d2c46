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

#include "fmgame/inequality.h"

#include <algorithm>

namespace fmgame {

bool LinearInequality::IsZeroRow() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return c.IsZero(); });
}

InequalitySystem::InequalitySystem(std::size_t num_vars,
                                   std::vector<LinearInequality> rows,
                                   OriginDims origin)
    : num_vars_(num_vars), rows_(std::move(rows)), origin_(origin) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const LinearInequality& row = rows_[i];
    if (row.coefficients.size() != num_vars_) {
      throw ShapeError("row " + std::to_string(i) + " has " +
                       std::to_string(row.coefficients.size()) +
                       " coefficients, expected " + std::to_string(num_vars_));
    }
    if (row.certificate.size() != origin_.rows) {
      throw ShapeError("row " + std::to_string(i) + " has a certificate of " +
                       std::to_string(row.certificate.size()) +
                       " entries, expected " + std::to_string(origin_.rows));
    }
    for (const Rational& y : row.certificate) {
      if (y.Sign() < 0) {
        throw PreconditionError("row " + std::to_string(i) +
                                " has a negative certificate entry");
      }
    }
  }
}

InequalitySystem NewSystem(const RationalMatrix& a, const RationalVector& b) {
  if (a.empty()) {
    throw ShapeError("NewSystem: cannot infer the variable count of an empty "
                     "matrix; pass num_vars explicitly");
  }
  return NewSystem(a.front().size(), a, b);
}

InequalitySystem NewSystem(std::size_t num_vars, const RationalMatrix& a,
                           const RationalVector& b) {
  if (a.size() != b.size()) {
    throw ShapeError("NewSystem: " + std::to_string(a.size()) +
                     " rows but rhs of length " + std::to_string(b.size()));
  }
  const std::size_t m = a.size();
  std::vector<LinearInequality> rows;
  rows.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k].size() != num_vars) {
      throw ShapeError("NewSystem: row " + std::to_string(k) + " has length " +
                       std::to_string(a[k].size()) + ", expected " +
                       std::to_string(num_vars));
    }
    RationalVector certificate(m);
    certificate[k] = 1;
    rows.push_back({a[k], b[k], std::move(certificate)});
  }
  return InequalitySystem(num_vars, std::move(rows), {m, num_vars});
}

SatisfactionReport Evaluate(const InequalitySystem& system,
                            const RationalVector& x) {
  if (x.size() != system.num_vars()) {
    throw ShapeError("Evaluate: point has " + std::to_string(x.size()) +
                     " coordinates, system has " +
                     std::to_string(system.num_vars()) + " unknowns");
  }
  SatisfactionReport report;
  report.slacks.reserve(system.num_rows());
  for (const LinearInequality& row : system.rows()) {
    Rational slack = row.rhs - Dot(row.coefficients, x);
    if (slack.Sign() < 0) report.satisfied = false;
    report.slacks.push_back(std::move(slack));
  }
  return report;
}

bool CheckCertificate(const InequalitySystem& system, std::size_t row_index,
                      const InequalitySystem& original) {
  if (row_index >= system.num_rows()) {
    throw std::out_of_range("CheckCertificate: row " +
                            std::to_string(row_index) + " of " +
                            std::to_string(system.num_rows()));
  }
  const OriginDims& dims = system.origin();
  if (!(original.origin() == dims) || original.num_rows() != dims.rows ||
      original.num_vars() != dims.vars || system.num_vars() != dims.vars) {
    throw ShapeError("CheckCertificate: original system does not match the "
                     "certificate dimensions");
  }
  const LinearInequality& row = system.row(row_index);
  const RationalVector& y = row.certificate;
  if (std::any_of(y.begin(), y.end(),
                  [](const Rational& v) { return v.Sign() < 0; })) {
    return false;
  }
  RationalVector combined(dims.vars);
  Rational combined_rhs;
  for (std::size_t k = 0; k < dims.rows; ++k) {
    if (y[k].IsZero()) continue;
    const LinearInequality& source = original.row(k);
    for (std::size_t j = 0; j < dims.vars; ++j) {
      combined[j] += y[k] * source.coefficients[j];
    }
    combined_rhs += y[k] * source.rhs;
  }
  return combined == row.coefficients && combined_rhs == row.rhs;
}

LinearInequality NormalizeRow(const LinearInequality& row) {
  auto lead = std::find_if(row.coefficients.begin(), row.coefficients.end(),
                           [](const Rational& c) { return !c.IsZero(); });
  if (lead == row.coefficients.end()) return row;
  const Rational scale = lead->Abs().Reciprocal();
  LinearInequality out;
  out.coefficients.reserve(row.coefficients.size());
  for (const Rational& c : row.coefficients) out.coefficients.push_back(c * scale);
  out.rhs = row.rhs * scale;
  out.certificate.reserve(row.certificate.size());
  for (const Rational& y : row.certificate) out.certificate.push_back(y * scale);
  return out;
}

}  // namespace fmgame
