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

#ifndef FMGAME_IO_H_
#define FMGAME_IO_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fmgame/game.h"
#include "fmgame/inequality.h"
#include "fmgame/rational.h"

namespace fmgame {

// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parses one entry: optional sign, digits, then optionally "/" and digits
// (nonzero) or "." and digits. Decimals convert exactly, "0.25" -> 1/4.
// Throws InputError on anything else.
Rational ParseRational(std::string_view text);

// Matrix documents come in two forms:
//   text: one matrix row per line, entries separated by whitespace, blank
//         lines and '#' comments ignored;
//   JSON: {"matrix": [[...], ...]} or a bare array of rows.
// JSON entries may be integers, decimal numbers or strings in the entry
// grammar. Decimal numbers are read from their literal text, not as doubles.
GameMatrix ParseMatrixDocument(std::string_view text);

// {"A": [[...]], "b": [...], "eliminate": [0, ...], "num_vars": n}.
// num_vars is optional unless A is empty.
struct SystemDocument {
  InequalitySystem system;
  std::vector<std::size_t> eliminate;
};
SystemDocument ParseSystemDocument(std::string_view text);

// {"matrix": [[...]], "p": [...], "q": [...], "v": ...}.
struct CheckDocument {
  GameMatrix game;
  RationalVector p;
  RationalVector q;
  Rational v;
};
CheckDocument ParseCheckDocument(std::string_view text);

}  // namespace fmgame

#endif  // FMGAME_IO_H_
