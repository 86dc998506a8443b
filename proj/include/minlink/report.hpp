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

#ifndef MINLINK_REPORT_HPP
#define MINLINK_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "minlink/geom.hpp"
#include "minlink/result.hpp"

namespace minlink {

enum class Variant { kVertexFrechet, kNonrestrictedFrechet, kVertexHausdorff, kCurve1d };

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

/// Summary of one solver run. Distances are recomputed from P and P', not
/// taken from the solver.
struct RunReport {
  Variant variant = Variant::kVertexFrechet;
  std::string input_digest;
  double delta = 0.0;
  std::optional<double> eps;
  SimplificationResult result;
  std::optional<double> global_distance;  // Frechet(P, P')
  std::vector<double> link_distances;     // per link, against its span or all of P
  double bound = 0.0;                     // what the distances must not exceed
  bool within_bound = false;
  std::optional<int> oracle_link_count;
  double wall_seconds = 0.0;

  std::string to_json() const;
};

/// FNV-1a over the canonical curve JSON, as 16 hex digits.
std::string curve_digest(const PolyCurve& p);

/// Smallest r with the segment inside the r-tube of P, to `tol`.
double segment_hausdorff(const Segment& seg, const PolyCurve& p, double tol = 1e-9);

/// Fills the recomputed distances and the bound check.
void audit(RunReport& report, const PolyCurve& p);

/// Static SVG 1.1 drawing of a 2D curve, an optional simplification, and an
/// optional delta-tube drawn as a wide translucent stroke.
std::string render_svg(const PolyCurve& p, const std::optional<PolyCurve>& simplified,
                       std::optional<double> delta);

}  // namespace minlink

#endif  // MINLINK_REPORT_HPP
