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

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "minlink/curve_io.hpp"
#include "minlink/geom.hpp"
#include "support.hpp"

using namespace minlink;

namespace {
PolyCurve curve(std::initializer_list<Point> pts) { return PolyCurve(std::vector<Point>(pts)); }
}  // namespace

TEST_CASE("eval_curve") {
  CHECK(eval_curve(curve({{0, 0}, {2, 0}}), 1.5) == Point{1, 0});
  const PolyCurve p = curve({{0, 0}, {2, 0}, {2, 2}});
  CHECK(eval_curve(p, 3) == Point{2, 2});
  CHECK(eval_curve(p, 2.25) == Point{2, 0.5});
  CHECK_THROWS_AS(eval_curve(p, 0.5), std::domain_error);
  CHECK_THROWS_AS(eval_curve(p, 3.01), std::domain_error);
}

TEST_CASE("integer parameters return vertices bit-exactly") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const PolyCurve p = testing::random_curve(rng, 6, 3);
    for (std::size_t i = 1; i <= p.size(); ++i) {
      CHECK(p.eval(static_cast<double>(i)) == p.vertex(i));
    }
  }
}

TEST_CASE("subcurve") {
  const PolyCurve p = curve({{0, 0}, {2, 0}, {2, 2}});
  const PolyCurve whole = subcurve(p, 1, 3);
  REQUIRE(whole.size() == 3);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(whole.vertex(i) == p.vertex(i));

  const PolyCurve mid = subcurve(p, 1.5, 2.5);
  REQUIRE(mid.size() == 3);
  CHECK(mid.vertex(1) == Point{1, 0});
  CHECK(mid.vertex(2) == Point{2, 0});
  CHECK(mid.vertex(3) == Point{2, 1});

  const PolyCurve deg = subcurve(curve({{0, 0}, {2, 0}}), 2, 2);
  REQUIRE(deg.size() == 2);
  CHECK(deg.vertex(1) == Point{2, 0});
  CHECK(deg.vertex(2) == Point{2, 0});

  CHECK_THROWS_AS(subcurve(p, 2.5, 1.5), std::domain_error);
}

TEST_CASE("subcurve concatenation traces the same points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const PolyCurve p = testing::random_curve(rng, 7, 2);
    double a = 1 + 6 * u(rng), b = 1 + 6 * u(rng), c = 1 + 6 * u(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const PolyCurve left = subcurve(p, a, b);
    const PolyCurve right = subcurve(p, b, c);
    const PolyCurve all = subcurve(p, a, c);
    CHECK(left.vertex(left.size()) == right.vertex(1));
    CHECK(left.length() + right.length() == doctest::Approx(all.length()));
    // Walking by arc length, the glued curve and the whole one coincide.
    for (int s = 0; s <= 50; ++s) {
      const double target = all.length() * s / 50.0;
      auto walk = [](const PolyCurve& q, double len) {
        for (std::size_t k = 1; k < q.size(); ++k) {
          const double el = q.edge(k).length();
          if (len <= el || k + 1 == q.size()) {
            return q.edge(k).at(el == 0 ? 0.0 : std::min(1.0, len / el));
          }
          len -= el;
        }
        return q.vertex(q.size());
      };
      const Point expect = walk(all, target);
      const Point got = target <= left.length() ? walk(left, target)
                                                : walk(right, target - left.length());
      CHECK(distance(expect, got) < 1e-9);
    }
  }
}

TEST_CASE("segment_frechet") {
  CHECK(segment_frechet({{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}) == 0.0);
  CHECK(segment_frechet({{0, 0}, {1, 0}}, {{0, 1}, {1, 3}}) == doctest::Approx(3.0));
  CHECK(segment_frechet({{0, 0}, {2, 0}}, {{0, 1}, {2, 1}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(segment_frechet({{0, 0}, {1, 0}}, {{0, 0, 0}, {1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("segment_frechet triangle inequality") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  auto seg = [&] { return Segment{{u(rng), u(rng)}, {u(rng), u(rng)}}; };
  for (int rep = 0; rep < 500; ++rep) {
    const Segment a = seg(), b = seg(), c = seg();
    CHECK(segment_frechet(a, c) <= segment_frechet(a, b) + segment_frechet(b, c) + 1e-12);
  }
}

TEST_CASE("ball_edge_free_interval") {
  const ParamInterval full = ball_edge_free_interval({1, 1}, std::sqrt(2.0), {{0, 0}, {2, 0}});
  CHECK(full == ParamInterval::closed(0, 1));
  CHECK(ball_edge_free_interval({0, 5}, 1, {{0, 0}, {1, 0}}).is_empty());
  CHECK(ball_edge_free_interval({0, 0}, 0, {{0, 0}, {1, 0}}) == ParamInterval::point(0));

  const ParamInterval mid = ball_edge_free_interval({5, 0.6}, 1, {{0, 0}, {10, 0}});
  CHECK(mid.lo == doctest::Approx(0.42));
  CHECK(mid.hi == doctest::Approx(0.58));
  CHECK(mid.lo_closed);
  CHECK(mid.hi_closed);
}

TEST_CASE("ball_edge_free_interval agrees with sampling and grows with delta") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> r(0, 3);
  for (int rep = 0; rep < 300; ++rep) {
    const Point c{u(rng), u(rng), u(rng)};
    const Segment e{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
    double d1 = r(rng), d2 = r(rng);
    if (d1 > d2) std::swap(d1, d2);
    const ParamInterval a = ball_edge_free_interval(c, d1, e);
    const ParamInterval b = ball_edge_free_interval(c, d2, e);
    if (!a.is_empty()) {
      CHECK(!b.is_empty());
      CHECK(b.lo <= a.lo + 1e-12);
      CHECK(b.hi >= a.hi - 1e-12);
    }
    for (int s = 0; s <= 200; ++s) {
      const double t = s / 200.0;
      const double dist = distance(e.at(t), c);
      if (dist < d1 - 1e-9) CHECK(a.contains(t));
      if (dist > d1 + 1e-9) CHECK(!a.contains(t));
    }
  }
}

TEST_CASE("ParamInterval intersect respects flags") {
  const ParamInterval a{0, 1, true, false};
  const ParamInterval b{1, 2, true, true};
  CHECK(a.intersect(b).is_empty());
  CHECK(ParamInterval::closed(0, 1).intersect(b) == ParamInterval::point(1));
  CHECK(!ParamInterval{0, 0, true, false}.contains(0));
  CHECK(ParamInterval::empty() == ParamInterval{3, 2, true, true});
}

TEST_CASE("PolyCurve validation") {
  CHECK_THROWS_AS(PolyCurve(std::vector<Point>{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyCurve(std::vector<Point>{{0, 0}, {1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyCurve(std::vector<Point>{{0, NAN}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("curve JSON and CSV parsing") {
  const LoadedCurve a = parse_curve_json(R"({"dim":2,"vertices":[[0,0],[1,0],[1,0],[2,1]]})");
  CHECK(a.curve.size() == 3);
  CHECK(a.warnings.size() == 1);
  const LoadedCurve b = parse_curve_csv("x,y\n0,0\n# note\n1,0\n2,1\n");
  CHECK(b.curve.size() == 3);
  CHECK(b.curve.vertex(3) == Point{2, 1});
  CHECK_THROWS_AS(parse_curve_json(R"({"vertices":[[0,0],[1,0],[0,0]]})"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json(R"({"dim":2,"vertices":[[0,0],[1,0,3]]})"),
                  CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json("not json"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_csv("0,0\n0,0\n"), CurveFormatError);

  const LoadedCurve round = parse_curve_json(curve_to_json(a.curve));
  CHECK(std::equal(round.curve.vertices().begin(), round.curve.vertices().end(),
                   a.curve.vertices().begin(), a.curve.vertices().end()));
}
