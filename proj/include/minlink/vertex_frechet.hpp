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

#ifndef MINLINK_VERTEX_FRECHET_HPP
#define MINLINK_VERTEX_FRECHET_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "minlink/frechet.hpp"
#include "minlink/geom.hpp"
#include "minlink/result.hpp"

namespace minlink {

inline constexpr int kInfCost = 1 << 29;

/// spines[v-1]: sorted, disjoint free intervals of {t : |P(t) - p_v| <= delta}.
struct SpineTable {
  std::vector<std::vector<ParamInterval>> spines;
};

SpineTable compute_spines(const PolyCurve& p, double delta, const Tolerances& tol = {});

struct ElementaryInterval {
  std::size_t spine = 0;  // 1-based vertex index
  ParamInterval span;
  int cost = kInfCost;
  // Backtracking: spine and piece index the cost came from.
  std::size_t pred_spine = 0;
  int pred_piece = -1;
};

/// Splits every spine at all spine endpoints (plus `extra_splits`). A piece
/// is F ∩ [s_k, s_{k+1}) for consecutive split values, and F ∩ {s_last} at
/// the final one, so every closed right end of a spine interval is a point
/// piece of its own.
std::vector<std::vector<ElementaryInterval>> elementary_intervals(
    const SpineTable& spines, const std::vector<double>& extra_splits = {});

/// For each piece, the minimum-cost contribution among those intersecting it
/// (ties: smaller tag, then smaller span start). nullopt if none does.
std::vector<std::optional<LabeledInterval>> subdivide(
    const std::vector<LabeledInterval>& contributions,
    const std::vector<ElementaryInterval>& pieces);

/// The min-link dynamic program over the free-space surface.
class VertexFrechetDP {
 public:
  struct Options {
    std::vector<double> extra_splits;
    Tolerances tol;
  };

  VertexFrechetDP(const PolyCurve& p, double delta);
  VertexFrechetDP(const PolyCurve& p, double delta, Options opts);

  const SpineTable& spines() const { return spines_; }
  const std::vector<ElementaryInterval>& pieces(std::size_t v) const {
    return pieces_[v - 1];
  }
  /// Cost of parameter t on spine v; kInfCost if unreachable or not free.
  int cost_at(std::size_t v, double t) const;
  const SimplificationResult& result() const { return result_; }

 private:
  void run();

  PolyCurve p_;
  double delta_;
  Options opts_;
  SpineTable spines_;
  std::vector<std::vector<ElementaryInterval>> pieces_;
  SimplificationResult result_;
};

/// Vertex-restricted min-# under the global Frechet distance.
SimplificationResult min_link_simplify_vr(const PolyCurve& p, double delta,
                                          const Tolerances& tol = {});

}  // namespace minlink

#endif  // MINLINK_VERTEX_FRECHET_HPP
