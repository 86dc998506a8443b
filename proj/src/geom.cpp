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

#include "minlink/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace minlink {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double squared_norm(const Point& a) { return dot(a, a); }

double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

double squared_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

Point lerp(const Point& a, const Point& b, double lambda) {
  require_same_dim(a, b);
  if (lambda == 0.0) return a;
  if (lambda == 1.0) return b;
  std::vector<double> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    c[i] = (1.0 - lambda) * a[i] + lambda * b[i];
  }
  return Point(std::move(c));
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
}

void require_same_dim(const PolyCurve& a, const PolyCurve& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("curve dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

// ---------------------------------------------------------------------------
// ParamInterval

bool ParamInterval::contains(double t) const {
  if (is_empty()) return false;
  const bool above = lo_closed ? t >= lo : t > lo;
  const bool below = hi_closed ? t <= hi : t < hi;
  return above && below;
}

ParamInterval ParamInterval::intersect(const ParamInterval& o) const {
  if (is_empty() || o.is_empty()) return empty();
  ParamInterval r;
  if (lo > o.lo) {
    r.lo = lo;
    r.lo_closed = lo_closed;
  } else if (o.lo > lo) {
    r.lo = o.lo;
    r.lo_closed = o.lo_closed;
  } else {
    r.lo = lo;
    r.lo_closed = lo_closed && o.lo_closed;
  }
  if (hi < o.hi) {
    r.hi = hi;
    r.hi_closed = hi_closed;
  } else if (o.hi < hi) {
    r.hi = o.hi;
    r.hi_closed = o.hi_closed;
  } else {
    r.hi = hi;
    r.hi_closed = hi_closed && o.hi_closed;
  }
  return r.is_empty() ? empty() : r;
}

bool ParamInterval::intersects(const ParamInterval& o) const {
  return !intersect(o).is_empty();
}

ParamInterval ParamInterval::shifted(double offset, double scale) const {
  if (is_empty()) return empty();
  return {offset + scale * lo, offset + scale * hi, lo_closed, hi_closed};
}

bool operator==(const ParamInterval& a, const ParamInterval& b) {
  if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
         a.hi_closed == b.hi_closed;
}

// ---------------------------------------------------------------------------
// PolyCurve

PolyCurve::PolyCurve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw std::invalid_argument("a curve needs at least two vertices");
  }
  const std::size_t d = vertices_[0].dim();
  if (d == 0) throw std::invalid_argument("points need at least one coordinate");
  for (const Point& p : vertices_) {
    if (p.dim() != d) throw std::invalid_argument("vertices of mixed dimension");
    for (double c : p.coords()) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
    }
  }
}

Point PolyCurve::eval(double t) const {
  const double n = domain_end();
  if (!(t >= 1.0 && t <= n)) {
    throw std::domain_error("curve parameter " + std::to_string(t) +
                            " outside [1, " + std::to_string(size()) + "]");
  }
  const double fl = std::floor(t);
  auto i = static_cast<std::size_t>(fl);
  if (i >= size()) return vertex(size());
  return lerp(vertex(i), vertex(i + 1), t - fl);
}

double PolyCurve::length() const {
  double len = 0.0;
  for (std::size_t k = 1; k < size(); ++k) len += distance(vertex(k), vertex(k + 1));
  return len;
}

Point eval_curve(const PolyCurve& curve, double t) { return curve.eval(t); }

PolyCurve subcurve(const PolyCurve& curve, double s, double t) {
  if (s > t) throw std::domain_error("subcurve requires s <= t");
  std::vector<Point> pts;
  pts.push_back(curve.eval(s));
  if (s == t) {
    pts.push_back(pts.front());
    return PolyCurve(std::move(pts));
  }
  const auto first = static_cast<std::size_t>(std::floor(s)) + 1;
  for (std::size_t k = first; static_cast<double>(k) < t; ++k) {
    pts.push_back(curve.vertex(k));
  }
  pts.push_back(curve.eval(t));
  return PolyCurve(std::move(pts));
}

PolyCurve vertex_subcurve(const PolyCurve& curve, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= curve.size())) {
    throw std::domain_error("vertex_subcurve requires 1 <= i < j <= n");
  }
  auto all = curve.vertices();
  return PolyCurve(std::vector<Point>(all.begin() + static_cast<long>(i - 1),
                                      all.begin() + static_cast<long>(j)));
}

double segment_frechet(const Segment& s1, const Segment& s2) {
  require_same_dim(s1.a, s2.a);
  return std::max(distance(s1.a, s2.a), distance(s1.b, s2.b));
}

ParamInterval ball_edge_free_interval(const Point& center, double delta,
                                      const Segment& edge, const Tolerances& tol) {
  require_same_dim(center, edge.a);
  const double widened = delta * (1.0 + tol.eps_geom);
  const double r2 = widened * widened;
  const bool in0 = squared_distance(edge.a, center) <= r2;
  const bool in1 = squared_distance(edge.b, center) <= r2;
  if (in0 && in1) return ParamInterval::closed(0.0, 1.0);

  // |w + t d|^2 = r^2 with w = a - center, d = b - a.
  double qa = 0.0, qb = 0.0, qc = -r2;
  for (std::size_t i = 0; i < center.dim(); ++i) {
    const double d = edge.b[i] - edge.a[i];
    const double w = edge.a[i] - center[i];
    qa += d * d;
    qb += 2.0 * d * w;
    qc += w * w;
  }
  if (qa == 0.0) {
    return in0 ? ParamInterval::closed(0.0, 1.0) : ParamInterval::empty();
  }
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) {
    // Tangency: the closed free-point definition counts the touching point.
    if (disc >= -tol.eps_geom * (qb * qb + 4.0 * qa * std::abs(qc))) {
      disc = 0.0;
    } else if (in0) {
      return ParamInterval::point(0.0);
    } else if (in1) {
      return ParamInterval::point(1.0);
    } else {
      return ParamInterval::empty();
    }
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (qb + std::copysign(sq, qb));
  double t1 = 0.0, t2 = 0.0;
  if (q == 0.0) {
    t1 = t2 = -qb / (2.0 * qa);
  } else {
    t1 = q / qa;
    t2 = qc / q;
    if (t1 > t2) std::swap(t1, t2);
  }

  ParamInterval r;
  if (in0) {
    r.lo = 0.0;
    r.lo_closed = true;
    t2 = std::max(t2, 0.0);
  } else if (t1 <= 0.0) {
    // The vertex is outside, so the true start is strictly positive.
    r.lo = 0.0;
    r.lo_closed = false;
  } else {
    r.lo = t1;
    r.lo_closed = true;
  }
  if (in1) {
    r.hi = 1.0;
    r.hi_closed = true;
    if (!in0) r.lo = std::min(r.lo, 1.0);
  } else if (t2 >= 1.0) {
    r.hi = 1.0;
    r.hi_closed = false;
  } else {
    r.hi = t2;
    r.hi_closed = true;
  }
  return r.is_empty() ? ParamInterval::empty() : r;
}

}  // namespace minlink
