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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iqc {

struct Sample {
  double x;
  double y;
};

/// A parsed two-column row together with its 1-based source line.
struct CsvRow {
  double a;
  double b;
  int line;
};

/// Reads a two-column CSV: first non-comment line must equal `header`,
/// '#' starts a comment, blank lines are skipped. Errors name `source` and
/// the offending line.
std::vector<CsvRow> read_two_column_csv(std::string_view text, std::string_view header,
                                        std::string_view source);

/// Reads a whole file, throwing ErrorKind::data if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Bundled datasets addressed as "builtin:<name>"; `kind` is "extinction" or
/// "atmosphere".
std::optional<std::string_view> builtin_dataset(std::string_view kind, std::string_view name);

/// Piecewise log-log interpolation over strictly increasing x. A segment
/// with a zero endpoint falls back to linear interpolation. Throws
/// ErrorKind::range outside [x_front, x_back].
double loglog_interpolate(std::span<const Sample> samples, double x);

}  // namespace iqc
