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

#ifndef MINLINK_CURVE1D_HPP
#define MINLINK_CURVE1D_HPP

#include <cstddef>

#include "minlink/geom.hpp"
#include "minlink/result.hpp"

namespace minlink {

struct Curve1dStats {
  // Edge inspections, counting both the walk and the backward searches that
  // place emitted vertices on P.
  std::size_t vertex_visits = 0;
};

/// Man-dog greedy for curve-restricted min-# in one dimension. The dog walks
/// P; the man is dragged on a leash of length delta and only moves when the
/// leash is taut. Every reversal of the man becomes a vertex of P', placed on
/// P at a parameter after the previous one. Requires a curve with dim() == 1.
SimplificationResult greedy_simplify_1d(const PolyCurve& p, double delta,
                                        Curve1dStats* stats = nullptr);

}  // namespace minlink

#endif  // MINLINK_CURVE1D_HPP
