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

#ifndef MINLINK_NONRESTRICTED_HPP
#define MINLINK_NONRESTRICTED_HPP

#include <cstddef>
#include <vector>

#include "minlink/geom.hpp"
#include "minlink/result.hpp"

namespace minlink {

/// Lattice of side eps * delta / (2 sqrt(d)) anchored at `center`. `corners`
/// holds every corner of every cell that meets the open ball, sorted
/// lexicographically. delta == 0 gives the single corner `center`.
struct BallGrid {
  Point center;
  double radius = 0.0;
  double side = 0.0;
  std::vector<Point> corners;
};

BallGrid ball_grid_corners(const Point& p, double delta, double eps);

/// Accepts seg when its Frechet distance to `sub` is at most (1 + eps/2) delta.
bool validate(const Segment& seg, const PolyCurve& sub, double delta, double eps,
              const Tolerances& tol = {});

struct NonrestrictedStats {
  std::size_t nodes = 0;
  std::size_t validations = 0;
};

/// Min-link path through the grid corners of the vertex balls, each link
/// validated against the subcurve between its two ball indices. On success
/// `spans` gives that subcurve per link; when no path exists `achieved` is
/// false and `note` says why.
SimplificationResult simplify_nonrestricted(const PolyCurve& p, double delta, double eps,
                                            NonrestrictedStats* stats = nullptr,
                                            const Tolerances& tol = {});

}  // namespace minlink

#endif  // MINLINK_NONRESTRICTED_HPP
