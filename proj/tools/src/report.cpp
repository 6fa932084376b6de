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


#include "qecsplit_cli/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace qecsplit::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_report(std::ostream& out, const RunConfig& config, const std::vector<ReportRow>& rows) {
  out << "# qecsplit report\n";
  std::istringstream cfg(serialize_config(config));
  for (std::string line; std::getline(cfg, line);) out << "# " << line << "\n";
  out << kCsvHeader << "\n";
  for (const ReportRow& r : rows) {
    out << format_number(r.p) << ',' << r.observable << ',' << format_number(r.rate) << ',';
    if (r.ratio) out << format_number(*r.ratio);
    out << ',';
    if (r.jumps_min) out << *r.jumps_min;
    out << ',';
    if (r.jumps_max) out << *r.jumps_max;
    out << ',' << r.decoder_calls << ',';
    if (r.rhat) out << format_number(*r.rhat);
    out << ',' << format_number(r.seconds) << "\n";
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

template <typename T>
bool parse_field(const std::string& s, T& out) {
  if (s == "nan") {
    if constexpr (std::is_floating_point_v<T>) {
      out = std::nan("");
      return true;
    }
    return false;
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<ReportRow> read_report(std::istream& in, const std::string& path) {
  std::vector<ReportRow> rows;
  bool header = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (line != kCsvHeader) throw ReportFormatError(path, line_no, "expected header '" + std::string(kCsvHeader) + "'");
      header = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 9) throw ReportFormatError(path, line_no, "expected 9 fields");
    ReportRow r;
    bool ok = parse_field(f[0], r.p) && !f[1].empty() && parse_field(f[2], r.rate) &&
              parse_field(f[6], r.decoder_calls) && parse_field(f[8], r.seconds);
    r.observable = f[1];
    auto opt = [&](const std::string& s, auto& target) {
      if (s.empty()) return;
      typename std::remove_reference_t<decltype(target)>::value_type v{};
      if (parse_field(s, v)) {
        target = v;
      } else {
        ok = false;
      }
    };
    opt(f[3], r.ratio);
    opt(f[4], r.jumps_min);
    opt(f[5], r.jumps_max);
    opt(f[7], r.rhat);
    if (!ok) throw ReportFormatError(path, line_no, "malformed field");
    rows.push_back(std::move(r));
  }
  if (!header) throw ReportFormatError(path, line_no, "missing header");
  return rows;
}

}  // namespace qecsplit::cli
