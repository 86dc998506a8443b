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

// Subset Sum reduction curve for curve-restricted min-# under the directed
// Hausdorff distance. Everything here is exact rational arithmetic.

#ifndef MINLINK_GADGET_HPP
#define MINLINK_GADGET_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "minlink/geom.hpp"
#include "minlink/subset_sum.hpp"

namespace minlink {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

struct RPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

class GadgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gamma == 0 picks the default delta / 2^20.
struct GadgetParams {
  Rational gamma = 0;
  Rational zeta = 0;
};

/// A horizontal level of the curve: r^i, l^i, or the tail t2..t9 of t.
struct GadgetLevel {
  enum class Kind { kR, kL, kT };
  Kind kind = Kind::kR;
  int index = 0;          // i of r^i / l^i; n for the tail
  std::size_t first = 0;  // 0-based vertex span, inclusive
  std::size_t last = 0;
  Rational y;
  std::string name() const;
};

/// Holes in the implicit obstacle between level g and level g + 1, ordered
/// left to right. `y` sits midway between the two levels.
struct GadgetGap {
  std::vector<Rational> holes;
  Rational y;
};

struct GadgetCurve {
  SubsetSumInstance instance;
  Rational gamma;
  Rational zeta;
  Rational delta;
  int k = 0;
  std::vector<RPoint> vertices;
  std::vector<GadgetLevel> levels;
  std::vector<GadgetGap> gaps;

  PolyCurve to_float() const;
};

/// Rejects empty sets, non-positive entries or target, and instances whose
/// last element breaks 0.5 a_n < B.
GadgetCurve generate_gadget(const SubsetSumInstance& inst, const GadgetParams& params = {});

/// One vertex per level; `choices[i]` selects the right (a-associated) hole
/// of the i-th two-hole gap.
struct HolePath {
  std::vector<bool> choices;
  std::vector<RPoint> vertices;
  std::vector<std::size_t> hosts;  // level index per vertex
};

/// Follows the reflection v' = 2h - v through the chosen holes.
HolePath hole_path(const GadgetCurve& curve, const std::vector<bool>& choices);

/// First hole path (by choice bitmask) that ends on the last vertex of the curve.
std::optional<HolePath> solve_gadget(const GadgetCurve& curve);

/// x-coordinates reached on level l^i (the tail when i == n) by hole paths.
std::set<Rational> reachable_x_set(const GadgetCurve& curve, int i);

enum class SkipTarget { kL, kR };
enum class HoleSide { kLeft, kRight };

/// Where a vertex must sit on the level before l^i (kL) or before r^i (kR)
/// for one link to pass the next two holes.
Rational skip_vertex_x(const GadgetCurve& curve, SkipTarget level, int i, HoleSide side);

struct VerifyReport {
  bool ok = false;
  std::string reason;
};

/// Exact check of a candidate simplification: 2n - 1 links, shared
/// endpoints, vertices on their host levels in curve order, and every link
/// inside the closed delta-neighbourhood of the curve.
VerifyReport verify_simplification(const GadgetCurve& curve, const HolePath& path);

/// Closed delta-neighbourhood containment of the segment ab.
bool link_in_tube(const GadgetCurve& curve, const RPoint& a, const RPoint& b);

/// Subset Sum answered through the gadget; reorders the set so the largest
/// element that still satisfies 0.5 a_n < B comes last.
bool decide_via_gadget(const SubsetSumInstance& inst, const GadgetParams& params = {});

std::string gadget_to_json(const GadgetCurve& curve);
/// Rebuilds the curve from the stored instance and parameters and checks the
/// stored vertices against it.
GadgetCurve gadget_from_json(const std::string& text);

}  // namespace minlink

#endif  // MINLINK_GADGET_HPP
