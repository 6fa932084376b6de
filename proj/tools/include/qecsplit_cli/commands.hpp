// Copyright 2026 The qecsplit Authors
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


#ifndef QECSPLIT_CLI_COMMANDS_HPP_
#define QECSPLIT_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "qecsplit_cli/config.hpp"
#include "qecsplit_cli/report.hpp"

namespace qecsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPartial = 2;

struct RunOutcome {
  std::vector<ReportRow> rows;
  bool partial = false;
};

// Runs the configured estimator; one summary line per row goes to `log`.
RunOutcome execute_run(const RunConfig& config, std::ostream& log);

// Full command line: build | run | plot | malignant-fraction.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qecsplit::cli

#endif  // QECSPLIT_CLI_COMMANDS_HPP_
