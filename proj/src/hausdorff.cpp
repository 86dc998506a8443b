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

#include "minlink/hausdorff.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "minlink/frechet.hpp"

namespace minlink {

bool valid_shortcut_hd(const PolyCurve& p, std::size_t i, std::size_t j, double delta,
                       const Tolerances& tol) {
  if (!(1 <= i && i < j && j <= p.size())) {
    throw std::domain_error("valid_shortcut_hd requires 1 <= i < j <= n");
  }
  if (j == i + 1) return true;
  return segment_in_tube({p.vertex(i), p.vertex(j)}, p, delta, tol);
}

ShortcutValidityMatrix shortcut_validity(const PolyCurve& p, double delta,
                                         const Tolerances& tol) {
  ShortcutValidityMatrix m;
  m.n = p.size();
  m.valid.assign(m.n, std::vector<bool>(m.n, false));
  for (std::size_t i = 1; i <= m.n; ++i) {
    for (std::size_t j = i + 1; j <= m.n; ++j) {
      m.valid[i - 1][j - 1] = valid_shortcut_hd(p, i, j, delta, tol);
    }
  }
  return m;
}

SimplificationResult simplify_vr_hausdorff(const PolyCurve& p, double delta,
                                           const Tolerances& tol) {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  const ShortcutValidityMatrix valid = shortcut_validity(p, delta, tol);
  const std::size_t n = p.size();
  // Indices only increase along edges, so one forward pass is a BFS.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n + 1, kNone), pred(n + 1, 0);
  dist[1] = 0;
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (dist[i] == kNone || !valid(i, j)) continue;
      if (dist[i] + 1 < dist[j]) {
        dist[j] = dist[i] + 1;
        pred[j] = i;
      }
    }
  }
  SimplificationResult r;
  for (std::size_t v = n; v != 0; v = pred[v]) r.indices.push_back(v);
  std::reverse(r.indices.begin(), r.indices.end());
  for (std::size_t i : r.indices) {
    r.points.push_back(p.vertex(i));
    r.params.push_back(static_cast<double>(i));
  }
  r.link_count = dist[n];
  r.achieved = true;
  return r;
}

}  // namespace minlink
