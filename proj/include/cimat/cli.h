// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `cimat` command line. Verbs: check, convert, op, enumerate, demo,
// realize. Human-readable text goes to `out` unprefixed; machine-readable
// witness lines start with "! ". Errors go to `err`.
//
// Exit codes: 0 pass, 1 violations (or a failed --verify), 2 input,
// validation or capacity error.

#ifndef CIMAT_CLI_H_
#define CIMAT_CLI_H_

#include <ostream>

namespace cimat {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cimat

#endif  // CIMAT_CLI_H_
