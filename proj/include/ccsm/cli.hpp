// Copyright 2026 The CCSM Authors.
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

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#ifndef CCSM_CLI_HPP_
#define CCSM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ccsm {

// Exit codes: 0 success, 1 no feasible set / check failed / not found,
// 2 input error, 3 internal inconsistency.
enum ExitCode : int { kExitOk = 0, kExitNone = 1, kExitInput = 2, kExitInconsistent = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccsm

#endif  // CCSM_CLI_HPP_
