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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "minlink/frechet.hpp"
#include "minlink/nonrestricted.hpp"
#include "minlink/vertex_frechet.hpp"
#include "support.hpp"

using namespace minlink;

namespace {

PolyCurve curve(std::initializer_list<Point> pts) { return PolyCurve(std::vector<Point>(pts)); }

std::vector<double> key(const Point& q) { return {q.coords().begin(), q.coords().end()}; }

// Corner set rebuilt cell by cell: keep a cell when the point of the box
// nearest to the center is strictly inside the ball.
std::set<std::vector<double>> corner_oracle(const Point& p, double delta, double eps) {
  const std::size_t d = p.dim();
  const double side = eps * delta / (2.0 * std::sqrt(double(d)));
  const int reach = int(std::ceil(delta / side)) + 2;
  std::set<std::vector<double>> out;
  std::vector<int> m(d, -reach);
  while (true) {
    double gap2 = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      const double lo = p[c] + side * m[c], hi = p[c] + side * (m[c] + 1);
      const double nearest = std::clamp(p[c], lo, hi);
      gap2 += (nearest - p[c]) * (nearest - p[c]);
    }
    if (gap2 < delta * delta * (1 - 1e-12)) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<double> x(d);
        for (std::size_t c = 0; c < d; ++c) x[c] = p[c] + side * (m[c] + int((mask >> c) & 1));
        out.insert(x);
      }
    }
    std::size_t c = 0;
    while (c < d && m[c] == reach) m[c++] = -reach;
    if (c == d) break;
    ++m[c];
  }
  return out;
}

}  // namespace

TEST_CASE("ball_grid_corners") {
  const BallGrid g = ball_grid_corners(Point{3}, 1.0, 1.0);
  CHECK(g.side == 0.5);
  REQUIRE(g.corners.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(g.corners[k] == Point{2 + 0.5 * k});

  const BallGrid zero = ball_grid_corners(Point{1, 2}, 0.0, 0.5);
  REQUIRE(zero.corners.size() == 1);
  CHECK(zero.corners[0] == Point{1, 2});

  CHECK_THROWS_AS(ball_grid_corners(Point{0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ball_grid_corners(Point{0}, 1.0, 1.5), std::invalid_argument);

  for (std::size_t d = 1; d <= 3; ++d) {
    for (double eps : {1.0, 0.5, 0.3}) {
      std::vector<double> c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = 0.37 * double(i + 1);
      const Point p(c);
      const BallGrid grid = ball_grid_corners(p, 2.0, eps);
      const auto oracle = corner_oracle(p, 2.0, eps);
      CHECK(grid.corners.size() == oracle.size());
      std::size_t hits = 0;
      for (const auto& q : grid.corners) hits += oracle.count(key(q));
      CHECK(hits == oracle.size());
      const double per_axis = 2 * std::ceil(2 * std::sqrt(double(d)) / eps) + 2;
      CHECK(double(grid.corners.size()) <= std::pow(per_axis, double(d)));
    }
  }
}

TEST_CASE("every point of the ball sits in a cell with all corners present") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t d = 1; d <= 3; ++d) {
    const Point p = d == 1 ? Point{0.3} : d == 2 ? Point{0.3, -1.2} : Point{0.3, -1.2, 5};
    const BallGrid g = ball_grid_corners(p, 1.5, 0.5);
    std::set<std::vector<double>> have;
    for (const auto& q : g.corners) have.insert(key(q));
    for (int rep = 0; rep < 1000; ++rep) {
      std::vector<double> dir(d);
      double len = 0;
      for (double& x : dir) len += (x = gauss(rng)) * x;
      const double r = 1.5 * std::pow(u(rng), 1.0 / double(d)) / std::sqrt(len);
      std::vector<int> cell(d);
      for (std::size_t c = 0; c < d; ++c) cell[c] = int(std::floor(dir[c] * r / g.side));
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<double> x(d);
        for (std::size_t c = 0; c < d; ++c) x[c] = p[c] + g.side * (cell[c] + int((mask >> c) & 1));
        CHECK(have.count(x) == 1);
      }
    }
  }
}

TEST_CASE("validate") {
  const PolyCurve edge = curve({{0, 0}, {4, 1}});
  for (double delta : {1e-6, 0.1, 3.0}) CHECK(validate({{0, 0}, {4, 1}}, edge, delta, 1.0));
  // Offset by (1 + eps/2) delta plus a margin.
  CHECK_FALSE(validate({{0, 1.5 + 1e-3}, {4, 2.5 + 1e-3}}, edge, 1.0, 1.0));
  CHECK(validate({{0, 1.5}, {4, 2.5}}, edge, 1.0, 1.0));

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  int accepted = 0;
  for (int rep = 0; rep < 3000; ++rep) {
    const PolyCurve sub = testing::random_curve(rng, 2 + rep % 5, 1 + rep % 3);
    const PolyCurve seg = testing::random_curve(rng, 2, sub.dim());
    const double delta = 1 + 6 * u(rng);
    const double eps = 0.25 + 0.75 * u(rng);
    const bool ok = validate({seg.vertex(1), seg.vertex(2)}, sub, delta, eps);
    CHECK(ok == decide_frechet(seg, sub, (1 + eps / 2) * delta));
    if (ok) {
      ++accepted;
      CHECK(frechet_distance(seg, sub, 1e-9) <= (1 + eps) * delta + 1e-9);
    }
  }
  CHECK(accepted > 100);
}

TEST_CASE("simplify_nonrestricted examples") {
  const auto line = simplify_nonrestricted(curve({{0, 0}, {1, 1}, {2, 2}, {5, 5}}), 0.5, 1.0);
  REQUIRE(line.achieved);
  CHECK(line.link_count == 1);
  CHECK(line.spans == std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}});

  const PolyCurve zz = curve({{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 1}, {6, 0}});
  const auto r = simplify_nonrestricted(zz, 0.5, 0.5);
  REQUIRE(r.achieved);
  CHECK(r.link_count <= 2 * min_link_simplify_vr(zz, 0.5).link_count + 1);
  CHECK(r.points.front() == zz.vertex(1));
  CHECK(r.points.back() == zz.vertex(7));

  CHECK_THROWS_AS(simplify_nonrestricted(zz, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("nonrestricted links stay close to their spans") {
  std::mt19937_64 rng(606);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t d = 1 + rep % 2;
    const PolyCurve p = testing::random_curve(rng, 4 + rep % 5, d);
    const auto dists = testing::pairwise_distances(p);
    for (double q : {0.25, 0.6}) {
      const double delta = testing::quantile(dists, q);
      for (double eps : {1.0, 0.5}) {
        const auto r = simplify_nonrestricted(p, delta, eps);
        REQUIRE(r.achieved);
        CHECK(r.link_count <= 2 * min_link_simplify_vr(p, delta).link_count + 1);
        REQUIRE(r.spans.size() == r.link_count);
        for (std::size_t k = 0; k < r.link_count; ++k) {
          const auto [i, j] = r.spans[k];
          CHECK(i < j);
          if (k > 0) CHECK(r.spans[k - 1].second == i);
          const PolyCurve link(std::vector<Point>{r.points[k], r.points[k + 1]});
          CHECK(frechet_distance(link, subcurve(p, double(i), double(j)), 1e-9) <=
                (1 + eps) * delta + 1e-6);
        }
      }
    }
  }
}

TEST_CASE("nonrestricted output is deterministic") {
  std::mt19937_64 rng(9);
  const PolyCurve p = testing::random_curve(rng, 7, 2);
  const double delta = testing::quantile(testing::pairwise_distances(p), 0.3);
  const auto a = simplify_nonrestricted(p, delta, 0.5);
  const auto b = simplify_nonrestricted(p, delta, 0.5);
  CHECK(a.points == b.points);
  CHECK(a.spans == b.spans);
}
