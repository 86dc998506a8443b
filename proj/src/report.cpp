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

#include "minlink/report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "minlink/curve_io.hpp"
#include "minlink/frechet.hpp"

namespace minlink {
namespace {

// Relative slack for the audit; the solvers work to about 1e-9.
constexpr double kAuditTol = 1e-6;

nlohmann::json points_json(const std::vector<Point>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : pts) out.push_back(std::vector<double>(q.coords().begin(), q.coords().end()));
  return out;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kVertexFrechet:
      return "vertex-frechet";
    case Variant::kNonrestrictedFrechet:
      return "nonrestricted-frechet";
    case Variant::kVertexHausdorff:
      return "vertex-hausdorff";
    case Variant::kCurve1d:
      break;
  }
  return "curve1d";
}

std::optional<Variant> parse_variant(const std::string& name) {
  for (Variant v : {Variant::kVertexFrechet, Variant::kNonrestrictedFrechet,
                    Variant::kVertexHausdorff, Variant::kCurve1d}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::string curve_digest(const PolyCurve& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : curve_to_json(p)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

double segment_hausdorff(const Segment& seg, const PolyCurve& p, double tol) {
  double hi = 0.0;
  for (const Point& end : {seg.a, seg.b}) {
    double best = distance(end, p.vertex(1));
    for (std::size_t k = 1; k < p.size(); ++k) {
      const Segment e = p.edge(k);
      const Point d = e.b - e.a;
      const double len2 = squared_norm(d);
      const double t = len2 == 0 ? 0 : std::clamp(dot(end - e.a, d) / len2, 0.0, 1.0);
      best = std::min(best, distance(end, e.at(t)));
    }
    hi = std::max(hi, best);
  }
  // The far end of the segment is within hi + length of every point.
  hi += seg.length();
  double lo = 0.0;
  const Tolerances exact{0.0, 1e-3};
  if (segment_in_tube(seg, p, lo, exact)) return 0.0;
  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (segment_in_tube(seg, p, mid, exact) ? hi : lo) = mid;
  }
  return hi;
}

void audit(RunReport& r, const PolyCurve& p) {
  r.link_distances.clear();
  r.global_distance.reset();
  const auto& res = r.result;
  if (!res.achieved) {
    r.within_bound = false;
    return;
  }
  const PolyCurve q = res.curve();
  double worst = 0.0;
  switch (r.variant) {
    case Variant::kVertexFrechet:
    case Variant::kCurve1d:
      r.bound = r.delta;
      r.global_distance = frechet_distance(p, q);
      worst = *r.global_distance;
      break;
    case Variant::kNonrestrictedFrechet:
      r.bound = (1.0 + r.eps.value_or(1.0)) * r.delta;
      for (std::size_t k = 0; k < res.spans.size(); ++k) {
        const PolyCurve link(std::vector<Point>{res.points[k], res.points[k + 1]});
        const auto [i, j] = res.spans[k];
        r.link_distances.push_back(
            frechet_distance(link, subcurve(p, double(i), double(j))));
        worst = std::max(worst, r.link_distances.back());
      }
      break;
    case Variant::kVertexHausdorff:
      r.bound = r.delta;
      for (std::size_t k = 0; k + 1 < res.points.size(); ++k) {
        r.link_distances.push_back(segment_hausdorff({res.points[k], res.points[k + 1]}, p));
        worst = std::max(worst, r.link_distances.back());
      }
      break;
  }
  r.within_bound = worst <= r.bound * (1 + kAuditTol) + 1e-12;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant_name(variant);
  j["input_digest"] = input_digest;
  j["delta"] = delta;
  if (eps) j["eps"] = *eps;
  j["achieved"] = result.achieved;
  if (!result.note.empty()) j["note"] = result.note;
  j["link_count"] = result.link_count;
  if (!result.indices.empty()) j["indices"] = result.indices;
  j["points"] = points_json(result.points);
  if (!result.params.empty()) j["params"] = result.params;
  if (!result.spans.empty()) {
    nlohmann::json spans = nlohmann::json::array();
    for (const auto& [i, k] : result.spans) spans.push_back({i, k});
    j["spans"] = spans;
  }
  if (global_distance) j["global_distance"] = *global_distance;
  if (!link_distances.empty()) j["link_distances"] = link_distances;
  j["bound"] = bound;
  j["within_bound"] = within_bound;
  if (oracle_link_count) j["oracle_link_count"] = *oracle_link_count;
  j["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

std::string render_svg(const PolyCurve& p, const std::optional<PolyCurve>& simplified,
                       std::optional<double> delta) {
  if (p.dim() != 2 || (simplified && simplified->dim() != 2)) {
    throw std::invalid_argument("plotting needs 2D curves");
  }
  double x0 = p.vertex(1)[0], x1 = x0, y0 = p.vertex(1)[1], y1 = y0;
  auto grow = [&](const PolyCurve& c) {
    for (const auto& q : c.vertices()) {
      x0 = std::min(x0, q[0]);
      x1 = std::max(x1, q[0]);
      y0 = std::min(y0, q[1]);
      y1 = std::max(y1, q[1]);
    }
  };
  grow(p);
  if (simplified) grow(*simplified);
  const double pad = std::max({delta.value_or(0.0), 0.05 * (x1 - x0), 0.05 * (y1 - y0), 1e-9});
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  const double w = x1 - x0, h = y1 - y0;
  const double scale = 800.0 / std::max(w, h);
  auto pts = [&](const PolyCurve& c) {
    std::ostringstream s;
    for (const auto& q : c.vertices()) {
      // SVG y grows downwards.
      s << (q[0] - x0) * scale << ',' << (y1 - q[1]) * scale << ' ';
    }
    return s.str();
  };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * scale
    << "\" height=\"" << h * scale << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (delta && *delta > 0) {
    o << "<polyline class=\"tube\" points=\"" << pts(p)
      << "\" fill=\"none\" stroke=\"#9ecae1\" stroke-opacity=\"0.45\" stroke-width=\""
      << 2 * *delta * scale << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  }
  o << "<polyline class=\"input\" points=\"" << pts(p)
    << "\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";
  if (simplified) {
    o << "<polyline class=\"simplified\" points=\"" << pts(*simplified)
      << "\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"2\"/>\n";
    for (const auto& q : simplified->vertices()) {
      o << "<circle cx=\"" << (q[0] - x0) * scale << "\" cy=\"" << (y1 - q[1]) * scale
        << "\" r=\"3\" fill=\"#e6550d\"/>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace minlink
