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


// Runs the CLI fixture manifest in-process and re-verifies emitted sections.

#ifndef STABLEFIX_TESTS_FIXTURE_RUNNER_H_
#define STABLEFIX_TESTS_FIXTURE_RUNNER_H_

#include <optional>
#include <string>
#include <vector>

namespace stablefix::testing {

struct FixtureCase {
  int line = 0;
  int expected_exit = 0;
  std::vector<std::string> args;  // fixture names resolved to paths
  std::string label;              // the manifest line as written
};

std::vector<FixtureCase> load_manifest(const std::string& dir);

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args);

// The instance text a run emitted (text or JSON mode), possibly empty.
std::string emitted_sections(const FixtureCase& c, const CliRun& run);

// Empty when the emitted sections parse, format back byte for byte, and
// satisfy the verb's contract; otherwise what went wrong.
std::optional<std::string> check_round_trip(const FixtureCase& c, const CliRun& run);

// Value of the first "key: value" line, if any.
std::optional<std::string> report_value(const std::string& out, const std::string& key);

}  // namespace stablefix::testing

#endif  // STABLEFIX_TESTS_FIXTURE_RUNNER_H_
