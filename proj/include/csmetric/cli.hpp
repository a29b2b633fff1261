// Copyright 2026 The csmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSMETRIC_CLI_HPP_
#define CSMETRIC_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "csmetric/serialize.hpp"

namespace csm::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

// Process environment as seen by the CLI. `seed_override` mirrors
// CSMETRIC_SEED, which takes precedence over --seed.
struct Environment {
  std::optional<std::string> seed_override;

  static Environment from_process();
};

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` (or the --out file), diagnostics to `err`.
//
// Exit codes: 0 every verdict passed / the solve converged, 1 a verdict
// failed / the solve did not converge, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env = {});

// Human-readable rendering of a report object.
std::string render_text(const Json& report);

}  // namespace csm::cli

#endif  // CSMETRIC_CLI_HPP_
