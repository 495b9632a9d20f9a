// Copyright 2026 The MMSLab Authors.
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

//
// Command-line driver. Subcommands: validate, mms, allocate, audit, bench,
// builtin, mech. Exit codes: 0 success, 1 property violated, 2 input or
// usage error, 3 resource cap exceeded.

#ifndef MMSLAB_CLI_H_
#define MMSLAB_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "mmslab/errors.h"

namespace mmslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

int ExitCodeFor(ErrorKind kind);

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmslab

#endif  // MMSLAB_CLI_H_
