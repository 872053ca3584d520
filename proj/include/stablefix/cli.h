// Copyright 2026 The stablefix Authors
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


// Command-line front end. Text reports are "key: value" lines followed by
// instance sections that parse back with parse_instance; --json wraps the
// same content in one object.
//
// Exit codes: 0 solved or YES, 1 NO or infeasible, 2 usage or data error.

#ifndef STABLEFIX_CLI_H_
#define STABLEFIX_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace stablefix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stablefix::cli

#endif  // STABLEFIX_CLI_H_
