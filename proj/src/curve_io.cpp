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

#include "minlink/curve_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace minlink {

using nlohmann::json;

LoadedCurve sanitize_vertices(std::vector<Point> raw) {
  LoadedCurve out;
  std::vector<Point> kept;
  kept.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!kept.empty() && kept.back() == raw[i]) {
      std::size_t j = i;
      while (j + 1 < raw.size() && raw[j + 1] == raw[i]) ++j;
      out.warnings.push_back("collapsed " + std::to_string(j - i + 1) +
                             " duplicate vertex(es) after input vertex " +
                             std::to_string(i));
      i = j;
      continue;
    }
    kept.push_back(std::move(raw[i]));
  }
  if (kept.size() < 2) {
    throw CurveFormatError("curve has fewer than two distinct vertices");
  }
  if (kept.size() > 2 && kept.front() == kept.back()) {
    throw CurveFormatError("closed curves are not supported");
  }
  try {
    out.curve = PolyCurve(std::move(kept));
  } catch (const std::invalid_argument& e) {
    throw CurveFormatError(e.what());
  }
  return out;
}

LoadedCurve parse_curve_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CurveFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw CurveFormatError("curve JSON needs a \"vertices\" array");
  }
  std::size_t dim = 0;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
      throw CurveFormatError("\"dim\" must be a positive integer");
    }
    dim = doc["dim"].get<std::size_t>();
  }
  std::vector<Point> raw;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.empty()) throw CurveFormatError("vertex must be a non-empty array");
    std::vector<double> c;
    for (const auto& x : v) {
      if (!x.is_number()) throw CurveFormatError("vertex coordinate is not a number");
      c.push_back(x.get<double>());
    }
    if (dim == 0) dim = c.size();
    if (c.size() != dim) {
      throw CurveFormatError("vertex has " + std::to_string(c.size()) +
                             " coordinates, expected " + std::to_string(dim));
    }
    raw.emplace_back(std::move(c));
  }
  return sanitize_vertices(std::move(raw));
}

LoadedCurve parse_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Point> raw;
  std::size_t dim = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::vector<double> c;
    std::istringstream row(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(row, cell, ',')) {
      std::size_t used = 0;
      try {
        c.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw CurveFormatError("non-numeric CSV row: " + line);
    }
    first_row = false;
    if (dim == 0) dim = c.size();
    if (c.size() != dim) throw CurveFormatError("CSV rows of mixed dimension");
    raw.emplace_back(std::move(c));
  }
  return sanitize_vertices(std::move(raw));
}

LoadedCurve load_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CurveFormatError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".csv") return parse_curve_csv(buf.str());
  return parse_curve_json(buf.str());
}

std::string curve_to_json(const PolyCurve& curve, int indent) {
  json doc;
  doc["dim"] = curve.dim();
  json verts = json::array();
  for (const Point& p : curve.vertices()) {
    verts.push_back(std::vector<double>(p.coords().begin(), p.coords().end()));
  }
  doc["vertices"] = std::move(verts);
  return doc.dump(indent);
}

void save_curve(const PolyCurve& curve, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw CurveFormatError("cannot write " + path.string());
  out << curve_to_json(curve, 2) << '\n';
}

}  // namespace minlink
