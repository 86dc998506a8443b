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

#ifndef MINLINK_GEOM_HPP
#define MINLINK_GEOM_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace minlink {

/// Comparison and root-solving slack shared by the floating-point modules.
struct Tolerances {
  double eps_geom = 1e-9;
  // Sampling step for densified cross-checks, as a fraction of curve length.
  double densify_step = 1e-3;
};

/// A point in R^d, d >= 1.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::vector<double> coords_;
};

double dot(const Point& a, const Point& b);
double squared_norm(const Point& a);
double norm(const Point& a);
/// Symmetric in its arguments bit-for-bit, which keeps corner tests consistent
/// across free-space boundaries that share a vertex pair.
double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
/// (1 - lambda) a + lambda b.
Point lerp(const Point& a, const Point& b, double lambda);

/// Straight segment a -> b, parametrized over [0, 1].
struct Segment {
  Point a;
  Point b;

  std::size_t dim() const { return a.dim(); }
  Point at(double t) const { return lerp(a, b, t); }
  double length() const { return distance(a, b); }
};

/// Closed/open-flagged interval of a parameter domain. The canonical empty
/// interval is `ParamInterval::empty()`.
struct ParamInterval {
  double lo = 1.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  static ParamInterval empty() { return {}; }
  static ParamInterval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static ParamInterval half_open(double lo, double hi) {
    return {lo, hi, true, false};
  }
  static ParamInterval point(double t) { return {t, t, true, true}; }

  bool is_empty() const {
    return lo > hi || (lo == hi && !(lo_closed && hi_closed));
  }
  bool is_point() const { return !is_empty() && lo == hi; }
  bool contains(double t) const;
  /// Non-empty intersection with `o`.
  bool intersects(const ParamInterval& o) const;
  ParamInterval intersect(const ParamInterval& o) const;
  /// Affine image t -> offset + scale * t, scale > 0.
  ParamInterval shifted(double offset, double scale = 1.0) const;

  friend bool operator==(const ParamInterval& a, const ParamInterval& b);
};

/// Polygonal curve over the parameter domain [1, n]: P(i + l) is the convex
/// combination of vertices i and i+1 (vertices numbered from 1).
class PolyCurve {
 public:
  PolyCurve() = default;
  /// Throws std::invalid_argument for fewer than two vertices, mixed
  /// dimensions, or non-finite coordinates.
  explicit PolyCurve(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::size_t dim() const { return vertices_.empty() ? 0 : vertices_[0].dim(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  double domain_end() const { return static_cast<double>(vertices_.size()); }

  /// 1-based vertex access.
  const Point& vertex(std::size_t i) const { return vertices_[i - 1]; }
  /// Edge k (1-based) from vertex k to vertex k+1.
  Segment edge(std::size_t k) const { return {vertex(k), vertex(k + 1)}; }
  std::span<const Point> vertices() const { return vertices_; }

  /// Throws std::domain_error outside [1, n].
  Point eval(double t) const;
  double length() const;

 private:
  std::vector<Point> vertices_;
};

Point eval_curve(const PolyCurve& curve, double t);

/// P[s, t] as a polyline <P(s), interior vertices, P(t)>. s == t yields a
/// two-vertex zero-length curve. Throws std::domain_error if s > t or either
/// parameter is outside [1, n].
PolyCurve subcurve(const PolyCurve& curve, double s, double t);

/// Vertices i..j (1-based, inclusive) as a curve; requires i < j.
PolyCurve vertex_subcurve(const PolyCurve& curve, std::size_t i, std::size_t j);

/// Frechet distance between two segments: the larger endpoint distance.
double segment_frechet(const Segment& s1, const Segment& s2);

/// {t in [0,1] : |edge(t) - center| <= delta}, a single closed interval or
/// empty. delta is widened by the relative slack tol.eps_geom. Endpoint
/// membership is decided by direct vertex distance, so free intervals meeting
/// at a shared vertex agree exactly. An end flagged open means the true end is
/// strictly inside, closer than rounding can resolve.
ParamInterval ball_edge_free_interval(const Point& center, double delta,
                                      const Segment& edge,
                                      const Tolerances& tol = {});

/// Throws std::invalid_argument if dimensions differ.
void require_same_dim(const Point& a, const Point& b);
void require_same_dim(const PolyCurve& a, const PolyCurve& b);

}  // namespace minlink

#endif  // MINLINK_GEOM_HPP
