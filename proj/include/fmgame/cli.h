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

#ifndef FMGAME_CLI_H_
#define FMGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace fmgame {

// Process exit codes of the fmgame tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,  // infeasible system or failed check
  kExitInputError = 2,
  kExitInternalError = 3,
};

// Runs one command. `args` is the full argument vector including the program
// name. Input paths of "-" (or omitted) read from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace fmgame

#endif  // FMGAME_CLI_H_
