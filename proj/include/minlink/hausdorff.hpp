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

#ifndef MINLINK_HAUSDORFF_HPP
#define MINLINK_HAUSDORFF_HPP

#include <cstddef>
#include <vector>

#include "minlink/geom.hpp"
#include "minlink/result.hpp"

namespace minlink {

/// valid[i][j] (1-based, i < j): the shortcut p_i p_j stays in the
/// delta-tube around the whole of P.
struct ShortcutValidityMatrix {
  std::size_t n = 0;
  std::vector<std::vector<bool>> valid;

  bool operator()(std::size_t i, std::size_t j) const { return valid[i - 1][j - 1]; }
};

bool valid_shortcut_hd(const PolyCurve& p, std::size_t i, std::size_t j, double delta,
                       const Tolerances& tol = {});

ShortcutValidityMatrix shortcut_validity(const PolyCurve& p, double delta,
                                         const Tolerances& tol = {});

/// Vertex-restricted min-# under the directed Hausdorff distance from P' to P.
SimplificationResult simplify_vr_hausdorff(const PolyCurve& p, double delta,
                                           const Tolerances& tol = {});

}  // namespace minlink

#endif  // MINLINK_HAUSDORFF_HPP
