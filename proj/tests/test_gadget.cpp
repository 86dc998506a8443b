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

#include "doctest.h"
#include "minlink/gadget.hpp"
#include "minlink/oracles.hpp"
#include "support.hpp"

using namespace minlink;

namespace {

const SubsetSumInstance kFig{{1, 2, 4}, 6};

Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }


}  // namespace

TEST_CASE("gadget for A = {1, 2, 4}, B = 6") {
  const GadgetCurve c = generate_gadget(kFig);
  CHECK(c.delta == 4);
  CHECK(c.k == 5);
  CHECK(c.gamma == q(4, 1 << 20));
  CHECK(c.vertices.front() == RPoint{0, 0});
  CHECK(c.vertices.back().x == 6 + 3 * c.gamma);
  CHECK(c.vertices.back().y == 10 * c.delta + 5 * c.gamma);
  CHECK(c.vertices[2] == RPoint{c.gamma / 2, c.gamma / 2});
  // r0 (8), m0 (2), per block l, f, r, m (9 + 2 + 9 + 2), t (10).
  CHECK(c.vertices.size() == 8 + 2 + 2 * 22 + 10);
  REQUIRE(c.levels.size() == 6);
  CHECK(c.levels[1].name() == "l^1");
  CHECK(c.levels[5].name() == "t");
  for (std::size_t g = 0; g + 1 < c.levels.size(); ++g) {
    CHECK(c.levels[g + 1].y - c.levels[g].y == 2 * c.delta + c.gamma);
  }
}

TEST_CASE("every curve vertex count follows the block layout") {
  for (std::size_t n = 1; n <= 6; ++n) {
    SubsetSumInstance inst;
    for (std::size_t i = 0; i < n; ++i) inst.a.push_back(std::int64_t(i + 1));
    inst.target = std::int64_t(n);
    const GadgetCurve c = generate_gadget(inst);
    CHECK(c.vertices.size() == 8 + 2 + (n - 1) * (9 + 2 + 9 + 2) + 10);
    CHECK(c.levels.size() == 2 * n);
    CHECK(c.to_float().size() == c.vertices.size());
  }
}

TEST_CASE("zeta moves spike tips vertically") {
  GadgetParams p;
  p.gamma = q(4, 1 << 20);
  p.zeta = p.gamma / Rational(1 << 20) / Rational(1 << 20);
  const GadgetCurve c = generate_gadget(kFig, p);
  CHECK(c.vertices[2] == RPoint{p.gamma / 2, p.gamma / 2 + p.zeta});
  // l^1 starts right after r0 and m0; its sixth vertex is the upward tip at x = 0.
  const RPoint l6 = c.vertices[10 + 6];
  CHECK(l6.x == 0);
  CHECK(l6.y == c.levels[1].y + p.gamma / 2 + p.zeta);
}

TEST_CASE("holes sit at the spike x-coordinates") {
  const GadgetCurve c = generate_gadget(kFig);
  const Rational g = c.gamma;
  REQUIRE(c.gaps.size() == 5);
  CHECK(c.gaps[0].holes == std::vector<Rational>{g / 2, q(1, 2) + g / 2});
  CHECK(c.gaps[1].holes == std::vector<Rational>{0});
  CHECK(c.gaps[2].holes == std::vector<Rational>{g / 2, q(2, 2) + g / 2});
  CHECK(c.gaps[3].holes == std::vector<Rational>{0});
  CHECK(c.gaps[4].holes == std::vector<Rational>{g / 2, q(4, 2) + g / 2});
  for (std::size_t i = 0; i < c.gaps.size(); ++i) {
    CHECK(c.gaps[i].y == (c.levels[i].y + c.levels[i + 1].y) / 2);
  }
}

TEST_CASE("reachable_x_set") {
  const GadgetCurve c = generate_gadget(kFig);
  const Rational g = c.gamma;
  std::set<Rational> want;
  for (int s = 0; s <= 7; ++s) want.insert(s + 3 * g);
  CHECK(reachable_x_set(c, 3) == want);
  CHECK(reachable_x_set(c, 1) == std::set<Rational>{g, 1 + g});
  CHECK(reachable_x_set(c, 2).count(2 * g) == 1);
  CHECK_THROWS_AS(reachable_x_set(c, 0), GadgetError);
}

TEST_CASE("skip_vertex_x") {
  const SubsetSumInstance inst{{4, 2, 3, 5}, 6};
  const GadgetCurve c = generate_gadget(inst);
  const Rational g = c.gamma;
  CHECK(skip_vertex_x(c, SkipTarget::kL, 1, HoleSide::kRight) == q(3, 4) * g + 3);
  for (int i = 1; i <= 3; ++i) {
    const Rational ai(inst.a[i - 1]), next(inst.a[i]);
    CHECK(skip_vertex_x(c, SkipTarget::kL, i, HoleSide::kLeft) == q(3, 4) * g);
    CHECK(skip_vertex_x(c, SkipTarget::kL, i, HoleSide::kRight) == q(3, 4) * (g + ai));
    CHECK(skip_vertex_x(c, SkipTarget::kR, i, HoleSide::kLeft) == -q(1, 4) * g);
    CHECK(skip_vertex_x(c, SkipTarget::kR, i, HoleSide::kRight) == -q(1, 4) * (g + next));
  }
}

TEST_CASE("solve and verify the figure instance") {
  const GadgetCurve c = generate_gadget(kFig);
  const auto path = solve_gadget(c);
  REQUIRE(path);
  CHECK(path->choices == std::vector<bool>{false, true, true});
  CHECK(path->vertices.size() == 6);
  const VerifyReport r = verify_simplification(c, *path);
  CHECK_MESSAGE(r.ok, r.reason);

  // Shifting one vertex a quarter gamma along its level misses the next hole.
  HolePath bent = *path;
  bent.vertices[2].x += c.gamma / 4;
  const VerifyReport b = verify_simplification(c, bent);
  CHECK_FALSE(b.ok);
  CHECK(b.reason.find("neighbourhood") != std::string::npos);

  HolePath wrong = hole_path(c, {true, true, true});
  CHECK_FALSE(verify_simplification(c, wrong).ok);
}

TEST_CASE("a skip lands on a fractional gamma and cannot finish") {
  const GadgetCurve c = generate_gadget(kFig);
  const Rational g = c.gamma;
  const Rational sx = skip_vertex_x(c, SkipTarget::kL, 1, HoleSide::kLeft);
  const RPoint v1{sx, 0};
  const RPoint v2{2 * c.gaps[1].holes[0] - (2 * c.gaps[0].holes[0] - sx), c.levels[2].y};
  CHECK(v2.x == -q(1, 4) * g);
  // One link crosses two levels through the aligned holes.
  CHECK(link_in_tube(c, v1, v2));
  CHECK_FALSE(link_in_tube(c, RPoint{0, 0}, v2));

  for (int mask = 0; mask < 4; ++mask) {
    HolePath p;
    p.vertices = {c.vertices.front(), v1, v2};
    p.hosts = {0, 0, 2};
    RPoint cur = v2;
    for (std::size_t gi = 2; gi < c.gaps.size(); ++gi) {
      const auto& holes = c.gaps[gi].holes;
      const bool right = holes.size() > 1 && ((mask >> (gi / 2 - 1)) & 1);
      cur = {2 * (right ? holes.back() : holes.front()) - cur.x, c.levels[gi + 1].y};
      p.vertices.push_back(cur);
      p.hosts.push_back(gi + 1);
    }
    // x = integer + c * gamma with c a proper fraction.
    const Rational whole(static_cast<long>(std::lround(cur.x.convert_to<double>())));
    const Rational c_gamma = (cur.x - whole) / g;
    CHECK(denominator(c_gamma) != 1);
    CHECK(denominator(c_gamma * 4) == 1);
    CHECK_FALSE(verify_simplification(c, p).ok);
    p.vertices.push_back(c.vertices.back());
    p.hosts.push_back(c.levels.size() - 1);
    const VerifyReport r = verify_simplification(c, p);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("links") != std::string::npos);
  }
}

TEST_CASE("gadget preconditions") {
  CHECK_THROWS_AS(generate_gadget({{2}, 1}), GadgetError);
  CHECK_THROWS_AS(generate_gadget({{}, 1}), GadgetError);
  CHECK_THROWS_AS(generate_gadget({{1, -2}, 3}), GadgetError);
  GadgetParams fat;
  fat.gamma = 1;
  CHECK_THROWS_AS(generate_gadget(kFig, fat), GadgetError);
  CHECK_FALSE(decide_via_gadget({{2}, 1}));
  CHECK(decide_via_gadget({{3, 5}, 8}));
  CHECK(decide_via_gadget({{9, 1, 2}, 3}));
  CHECK_FALSE(decide_via_gadget({{9, 1, 2}, 4}));
}

TEST_CASE("reduction agrees with subset sum on random instances") {
  std::mt19937_64 rng(64);
  GadgetParams tight;
  for (int rep = 0; rep < 64; ++rep) {
    const SubsetSumInstance inst = testing::random_subset_sum(rng);
    const bool truth = subset_sum_brute(inst);
    for (bool nondegenerate : {false, true}) {
      GadgetParams p;
      if (nondegenerate) {
        const Rational delta(*std::max_element(inst.a.begin(), inst.a.end()));
        p.gamma = delta / Rational(1 << 20);
        p.zeta = p.gamma / Rational(1 << 20) / Rational(1 << 20);
      }
      const GadgetCurve c = generate_gadget(inst, p);
      const auto path = solve_gadget(c);
      CHECK(path.has_value() == truth);
      if (path) {
        const VerifyReport r = verify_simplification(c, *path);
        CHECK_MESSAGE(r.ok, r.reason);
      }
    }
  }
}

TEST_CASE("gadget JSON round trip") {
  const GadgetCurve c = generate_gadget(kFig);
  const GadgetCurve back = gadget_from_json(gadget_to_json(c));
  CHECK(back.vertices == c.vertices);
  CHECK(back.gamma == c.gamma);
  std::string text = gadget_to_json(c);
  const auto at = text.find("\"1/262144\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 10, "\"1/262145\"");
  CHECK_THROWS_AS(gadget_from_json(text), GadgetError);
  CHECK_THROWS_AS(gadget_from_json("{"), GadgetError);
}
