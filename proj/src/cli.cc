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

#include "fmgame/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "fmgame/fme.h"
#include "fmgame/game.h"
#include "fmgame/io.h"
#include "json.hpp"

namespace fmgame {
namespace {

using nlohmann::json;

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream contents;
  contents << file.rdbuf();
  return contents.str();
}

json ToJson(const RationalVector& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

json ToApproxJson(const RationalVector& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.ToDouble());
  return out;
}

std::string Join(const RationalVector& values) {
  std::string out;
  for (const Rational& v : values) {
    if (!out.empty()) out += ' ';
    out += v.ToString();
  }
  return out;
}

int Solve(const std::string& path, const std::string& format, bool approx,
          std::istream& in, std::ostream& out) {
  const GameMatrix game = ParseMatrixDocument(ReadInput(path, in));
  const GameSolution solution = SolveGame(game);
  // SolveGame already verified; this keeps the printed flag honest.
  const bool verified =
      VerifySolution(game, solution.p, solution.q, solution.value);
  if (!verified) throw InternalError("solve: unverified solution");

  if (format == "structured") {
    json doc = {{"value", solution.value.ToString()},
                {"p", ToJson(solution.p)},
                {"q", ToJson(solution.q)},
                {"verified", verified},
                {"multiplier", ToJson(solution.multiplier)}};
    if (approx) {
      doc["approximate"] = {{"value", solution.value.ToDouble()},
                            {"p", ToApproxJson(solution.p)},
                            {"q", ToApproxJson(solution.q)}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "value: " << solution.value << "\n"
        << "p: " << Join(solution.p) << "\n"
        << "q: " << Join(solution.q) << "\n"
        << "verified: true\n";
    if (approx) {
      out << "value (approximate): " << solution.value.ToDouble() << "\n";
    }
  }
  return kExitOk;
}

int ProjectCommand(const std::string& path, bool certificates,
                   std::istream& in, std::ostream& out) {
  const SystemDocument doc = ParseSystemDocument(ReadInput(path, in));
  const EliminationTrace trace = Project(doc.system, doc.eliminate);

  // Feasibility of the input is decided by eliminating everything.
  std::vector<std::size_t> all(doc.system.num_vars());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const InequalitySystem full = Project(doc.system, all).final_level();
  const LinearInequality* witness = nullptr;
  for (const LinearInequality& row : full.rows()) {
    if (row.IsZeroRow() && row.rhs.Sign() < 0) {
      witness = &row;
      break;
    }
  }

  json rows = json::array();
  for (const LinearInequality& row : trace.final_level().rows()) {
    json entry = {{"coeffs", ToJson(row.coefficients)},
                  {"rhs", row.rhs.ToString()}};
    if (certificates) entry["certificate"] = ToJson(row.certificate);
    rows.push_back(std::move(entry));
  }
  json order = json::array();
  for (std::size_t var : trace.order) order.push_back(var);
  json result = {{"rows", std::move(rows)},
                 {"feasible", witness == nullptr},
                 {"order", std::move(order)}};
  if (witness != nullptr) {
    result["infeasibility_certificate"] = ToJson(witness->certificate);
  }
  out << result.dump(2) << "\n";
  return witness == nullptr ? kExitOk : kExitRejected;
}

int Check(const std::string& path, std::istream& in, std::ostream& out) {
  const CheckDocument doc = ParseCheckDocument(ReadInput(path, in));
  const bool valid = VerifySolution(doc.game, doc.p, doc.q, doc.v);
  out << json{{"valid", valid}}.dump(2) << "\n";
  return valid ? kExitOk : kExitRejected;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier-Motzkin elimination and zero-sum game solver",
               "fmgame"};
  app.require_subcommand(1);

  std::string solve_path, solve_format = "text";
  bool solve_approx = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve a zero-sum matrix game");
  solve->add_option("file", solve_path, "Matrix document ('-' for stdin)");
  solve->add_option("--out", solve_format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  solve->add_flag("--approx", solve_approx,
                  "Also print approximate decimal values, labelled as such");

  std::string project_path;
  bool project_certificates = false;
  CLI::App* project =
      app.add_subcommand("project", "Eliminate variables from a system");
  project->add_option("file", project_path, "System document ('-' for stdin)");
  project->add_flag("--certificates", project_certificates,
                    "Include each row's combination of the input rows");

  std::string check_path;
  CLI::App* check =
      app.add_subcommand("check", "Verify a proposed value and strategies");
  check->add_option("file", check_path, "Check document ('-' for stdin)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return Solve(solve_path, solve_format, solve_approx, in, out);
    if (*project) return ProjectCommand(project_path, project_certificates, in, out);
    if (*check) return Check(check_path, in, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::length_error& e) {
    err << "input too large: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace fmgame
