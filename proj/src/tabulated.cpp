// Copyright 2026 The iqc Authors
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

#include "iqc/tabulated.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "iqc/error.hpp"

namespace iqc {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::string_view source, int line, const std::string& msg) {
  fail(ErrorKind::parse, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

double parse_field(std::string_view field, std::string_view source, int line) {
  field = trim(field);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || end != field.data() + field.size() || !std::isfinite(v))
    parse_error(source, line, "invalid number '" + std::string(field) + "'");
  return v;
}

}  // namespace

std::vector<CsvRow> read_two_column_csv(std::string_view text, std::string_view header,
                                        std::string_view source) {
  // Skip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<CsvRow> rows;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!header_seen) {
      if (line != header)
        parse_error(source, line_no, "expected header '" + std::string(header) + "', got '" +
                                         std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
      parse_error(source, line_no, "expected exactly two comma-separated fields");
    rows.push_back({parse_field(line.substr(0, comma), source, line_no),
                    parse_field(line.substr(comma + 1), source, line_no), line_no});
  }
  if (!header_seen) parse_error(source, line_no, "missing header '" + std::string(header) + "'");
  return rows;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::data, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double loglog_interpolate(std::span<const Sample> samples, double x) {
  if (samples.size() < 2) fail(ErrorKind::data, "interpolation needs at least two samples");
  if (!(x >= samples.front().x && x <= samples.back().x)) {
    std::ostringstream msg;
    msg << "wavelength " << x << " m outside tabulated range [" << samples.front().x << ", "
        << samples.back().x << "] m";
    fail(ErrorKind::range, msg.str());
  }

  const auto it = std::lower_bound(samples.begin(), samples.end(), x,
                                   [](const Sample& s, double v) { return s.x < v; });
  if (it->x == x) return it->y;
  const Sample& a = *(it - 1);
  const Sample& b = *it;

  if (a.y > 0.0 && b.y > 0.0) {
    const double t = std::log(x / a.x) / std::log(b.x / a.x);
    return std::exp(std::log(a.y) + t * std::log(b.y / a.y));
  }
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

}  // namespace iqc
