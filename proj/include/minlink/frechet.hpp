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

#ifndef MINLINK_FRECHET_HPP
#define MINLINK_FRECHET_HPP

#include <cstddef>
#include <vector>

#include "minlink/geom.hpp"

namespace minlink {

/// True iff the Frechet distance of P and Q is at most delta (closed free
/// space, relative slack tol.eps_geom on delta).
bool decide_frechet(const PolyCurve& p, const PolyCurve& q, double delta,
                    const Tolerances& tol = {});

/// Bisection on [max endpoint distance, max vertex-pair distance] down to an
/// interval of width tol; returns its upper end.
double frechet_distance(const PolyCurve& p, const PolyCurve& q, double tol = 1e-9);

/// Sub-interval of seg's [0, 1] within distance delta of `edge`.
ParamInterval capsule_cover_interval(const Segment& edge, double delta,
                                     const Segment& seg, const Tolerances& tol = {});

/// seg lies in the closed delta-neighbourhood of P. Gaps in the capsule
/// cover narrower than tol.eps_geom (in seg's parameter) are ignored.
bool segment_in_tube(const Segment& seg, const PolyCurve& p, double delta,
                     const Tolerances& tol = {});

/// Interval with a cost and provenance. `source` indexes the entry that
/// produced it; `tag` is free for the caller (the DP stores the spine).
struct LabeledInterval {
  ParamInterval span;
  int cost = 0;
  int source = -1;
  int tag = 0;
};

using ReachabilityFrontier = std::vector<LabeledInterval>;

/// Pointwise minimum of the labels. Ties go to smaller (tag, span.lo, source).
/// Output is sorted and disjoint; adjacent pieces with equal labels merge.
ReachabilityFrontier lower_envelope(const std::vector<LabeledInterval>& items);

/// Propagates entry intervals on the bottom boundary of the strip between
/// P and `shortcut` (bottom = ball around shortcut.a, top = ball around
/// shortcut.b; x is P's parameter) to the top boundary. Output is the lower
/// envelope of what each cost class reaches; labels are not incremented.
ReachabilityFrontier reach_through_strip(const PolyCurve& p, const Segment& shortcut,
                                         double delta,
                                         const ReachabilityFrontier& entries,
                                         const Tolerances& tol = {});

/// Same contract, one sweep per entry. Kept for cross-checking.
ReachabilityFrontier reach_through_strip_naive(const PolyCurve& p,
                                               const Segment& shortcut, double delta,
                                               const ReachabilityFrontier& entries,
                                               const Tolerances& tol = {});

}  // namespace minlink

#endif  // MINLINK_FRECHET_HPP
