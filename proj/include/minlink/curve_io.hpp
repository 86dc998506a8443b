// Copyright 2026 The minlink Authors
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

#ifndef MINLINK_CURVE_IO_HPP
#define MINLINK_CURVE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlink/geom.hpp"

namespace minlink {

/// Malformed curve input (bad JSON/CSV, closed curve, too few vertices).
class CurveFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedCurve {
  PolyCurve curve;
  // One message per collapsed run of duplicate vertices.
  std::vector<std::string> warnings;
};

// Curve JSON: {"dim": d, "vertices": [[x1, ..., xd], ...]}.
// CSV: one vertex per row, comma separated; '#' lines and a non-numeric
// header row are skipped.
LoadedCurve parse_curve_json(const std::string& text);
LoadedCurve parse_curve_csv(const std::string& text);
/// Dispatches on the ".csv" extension, JSON otherwise.
LoadedCurve load_curve(const std::filesystem::path& path);

std::string curve_to_json(const PolyCurve& curve, int indent = -1);
void save_curve(const PolyCurve& curve, const std::filesystem::path& path);

/// Collapses consecutive duplicate vertices and rejects closed or degenerate
/// curves. Used by both parsers.
LoadedCurve sanitize_vertices(std::vector<Point> raw);

}  // namespace minlink

#endif  // MINLINK_CURVE_IO_HPP
