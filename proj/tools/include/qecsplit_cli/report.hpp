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


#ifndef QECSPLIT_CLI_REPORT_HPP_
#define QECSPLIT_CLI_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecsplit_cli/config.hpp"

namespace qecsplit::cli {

inline constexpr const char* kCsvHeader = "p,observable,rate,ratio,jumps_min,jumps_max,decoder_calls,rhat,seconds";

struct ReportRow {
  double p = 0.0;
  std::string observable;
  double rate = 0.0;
  std::optional<double> ratio;
  std::optional<std::uint64_t> jumps_min;
  std::optional<std::uint64_t> jumps_max;
  std::uint64_t decoder_calls = 0;
  std::optional<double> rhat;
  double seconds = 0.0;
};

// Thrown for a CSV that does not follow the report schema.
class ReportFormatError : public std::runtime_error {
 public:
  ReportFormatError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Comment block with the resolved config, the header, then one line per row.
void write_report(std::ostream& out, const RunConfig& config, const std::vector<ReportRow>& rows);
std::vector<ReportRow> read_report(std::istream& in, const std::string& path);

std::string format_number(double v);

}  // namespace qecsplit::cli

#endif  // QECSPLIT_CLI_REPORT_HPP_
