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

#include "fmgame/io.h"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fmgame {
namespace {

using nlohmann::json;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// DOM builder that keeps floating-point literals as their source text so
// that they can be converted to rationals exactly.
class ExactNumberParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  explicit ExactNumberParser(json& root)
      : nlohmann::detail::json_sax_dom_parser<json>(root, true) {}

  bool number_float(double /*value*/, const std::string& literal) {
    std::string copy = literal;
    return string(copy);
  }
};

json ParseJson(std::string_view text) {
  json root;
  ExactNumberParser handler(root);
  try {
    json::sax_parse(text, &handler);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return root;
}

Rational EntryFromJson(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(value.get<std::uint64_t>()), 10), 1);
    }
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>()), 10), 1);
  }
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a number or a numeric string");
}

RationalVector VectorFromJson(const json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected an array");
  RationalVector out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(EntryFromJson(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

RationalMatrix MatrixFromJson(const json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected an array of rows");
  RationalMatrix out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(VectorFromJson(value[i], where + "[" + std::to_string(i) + "]"));
    if (out.back().size() != out.front().size()) {
      throw InputError(where + ": rows have different lengths");
    }
  }
  return out;
}

const json& RequireField(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

GameMatrix MakeGame(RationalMatrix entries) {
  try {
    return GameMatrix(std::move(entries));
  } catch (const ShapeError& e) {
    throw InputError(e.what());
  }
}

RationalMatrix ParseTextMatrix(std::string_view text) {
  RationalMatrix rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    RationalVector row;
    std::string token;
    while (tokens >> token) {
      try {
        row.push_back(ParseRational(token));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(line_number) + ": " +
                         e.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(line_number) +
                       ": rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool LooksLikeJson(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string original(text);
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const std::size_t split = rest.find_first_of("/.");
  const std::string_view whole = rest.substr(0, split);
  if (!AllDigits(whole)) {
    throw InputError("malformed number \"" + original + "\"");
  }
  mpz_class numerator(std::string(whole), 10);
  mpz_class denominator = 1;
  if (split != std::string_view::npos) {
    const std::string_view tail = rest.substr(split + 1);
    if (!AllDigits(tail)) {
      throw InputError("malformed number \"" + original + "\"");
    }
    if (rest[split] == '/') {
      denominator = mpz_class(std::string(tail), 10);
      if (denominator == 0) {
        throw InputError("zero denominator in \"" + original + "\"");
      }
    } else {
      mpz_ui_pow_ui(denominator.get_mpz_t(), 10, tail.size());
      numerator = numerator * denominator + mpz_class(std::string(tail), 10);
    }
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

GameMatrix ParseMatrixDocument(std::string_view text) {
  if (!LooksLikeJson(text)) return MakeGame(ParseTextMatrix(text));
  const json doc = ParseJson(text);
  if (doc.is_array()) return MakeGame(MatrixFromJson(doc, "matrix"));
  return MakeGame(MatrixFromJson(RequireField(doc, "matrix"), "matrix"));
}

SystemDocument ParseSystemDocument(std::string_view text) {
  const json doc = ParseJson(text);
  RationalMatrix a = MatrixFromJson(RequireField(doc, "A"), "A");
  RationalVector b = VectorFromJson(RequireField(doc, "b"), "b");

  std::size_t num_vars = a.empty() ? 0 : a.front().size();
  if (doc.contains("num_vars")) {
    const json& declared = doc.at("num_vars");
    if (!declared.is_number_unsigned()) {
      throw InputError("num_vars: expected a nonnegative integer");
    }
    num_vars = declared.get<std::size_t>();
  }
  if (a.size() != b.size()) {
    throw InputError("A has " + std::to_string(a.size()) +
                     " rows but b has " + std::to_string(b.size()) +
                     " entries");
  }
  std::optional<InequalitySystem> system;
  try {
    system.emplace(NewSystem(num_vars, a, b));
  } catch (const ShapeError& e) {
    throw InputError(e.what());
  }

  std::vector<std::size_t> eliminate;
  if (doc.contains("eliminate")) {
    const json& list = doc.at("eliminate");
    if (!list.is_array()) throw InputError("eliminate: expected an array");
    std::set<std::size_t> seen;
    for (const json& index : list) {
      if (!index.is_number_unsigned()) {
        throw InputError("eliminate: indices must be nonnegative integers");
      }
      const std::size_t var = index.get<std::size_t>();
      if (var >= num_vars) {
        throw InputError("eliminate: index " + std::to_string(var) +
                         " out of range for " + std::to_string(num_vars) +
                         " unknowns");
      }
      if (!seen.insert(var).second) {
        throw InputError("eliminate: duplicate index " + std::to_string(var));
      }
      eliminate.push_back(var);
    }
  }
  return {std::move(*system), std::move(eliminate)};
}

CheckDocument ParseCheckDocument(std::string_view text) {
  const json doc = ParseJson(text);
  GameMatrix game = MakeGame(MatrixFromJson(RequireField(doc, "matrix"), "matrix"));
  RationalVector p = VectorFromJson(RequireField(doc, "p"), "p");
  RationalVector q = VectorFromJson(RequireField(doc, "q"), "q");
  Rational v = EntryFromJson(RequireField(doc, "v"), "v");
  if (p.size() != game.rows() || q.size() != game.cols()) {
    throw InputError("strategy lengths do not match the matrix");
  }
  return {std::move(game), std::move(p), std::move(q), std::move(v)};
}

}  // namespace fmgame
