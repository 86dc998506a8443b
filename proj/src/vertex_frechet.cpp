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

#include "minlink/vertex_frechet.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace minlink {

SpineTable compute_spines(const PolyCurve& p, double delta, const Tolerances& tol) {
  SpineTable table;
  table.spines.resize(p.size());
  for (std::size_t v = 1; v <= p.size(); ++v) {
    auto& out = table.spines[v - 1];
    for (std::size_t k = 1; k < p.size(); ++k) {
      ParamInterval iv = ball_edge_free_interval(p.vertex(v), delta, p.edge(k), tol)
                             .shifted(static_cast<double>(k));
      if (iv.is_empty()) continue;
      if (!out.empty() && out.back().hi == iv.lo &&
          (out.back().hi_closed || iv.lo_closed)) {
        out.back().hi = iv.hi;
        out.back().hi_closed = iv.hi_closed;
      } else {
        out.push_back(iv);
      }
    }
  }
  return table;
}

std::vector<std::vector<ElementaryInterval>> elementary_intervals(
    const SpineTable& spines, const std::vector<double>& extra_splits) {
  std::vector<double> cuts;
  double lo_bound = 0.0, hi_bound = 0.0;
  bool any = false;
  for (const auto& spine : spines.spines) {
    for (const auto& iv : spine) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
      lo_bound = any ? std::min(lo_bound, iv.lo) : iv.lo;
      hi_bound = any ? std::max(hi_bound, iv.hi) : iv.hi;
      any = true;
    }
  }
  for (double s : extra_splits) {
    if (any && s >= lo_bound && s <= hi_bound) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::vector<ElementaryInterval>> out(spines.spines.size());
  for (std::size_t v = 0; v < spines.spines.size(); ++v) {
    for (const auto& f : spines.spines[v]) {
      auto k = static_cast<std::size_t>(
          std::lower_bound(cuts.begin(), cuts.end(), f.lo) - cuts.begin());
      for (; k < cuts.size() && cuts[k] <= f.hi; ++k) {
        const ParamInterval atom = k + 1 < cuts.size()
                                       ? ParamInterval::half_open(cuts[k], cuts[k + 1])
                                       : ParamInterval::point(cuts[k]);
        const ParamInterval piece = f.intersect(atom);
        if (piece.is_empty()) continue;
        ElementaryInterval e;
        e.spine = v + 1;
        e.span = piece;
        out[v].push_back(e);
      }
    }
  }
  return out;
}

std::vector<std::optional<LabeledInterval>> subdivide(
    const std::vector<LabeledInterval>& contributions,
    const std::vector<ElementaryInterval>& pieces) {
  const ReachabilityFrontier env = lower_envelope(contributions);
  std::vector<std::optional<LabeledInterval>> out(pieces.size());
  auto better = [](const LabeledInterval& a, const LabeledInterval& b) {
    return std::tie(a.cost, a.tag, a.span.lo, a.source) <
           std::tie(b.cost, b.tag, b.span.lo, b.source);
  };
  std::size_t ptr = 0;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const ParamInterval& piece = pieces[j].span;
    // Envelope pieces wholly left of this piece are never needed again.
    while (ptr < env.size() &&
           (env[ptr].span.hi < piece.lo ||
            (env[ptr].span.hi == piece.lo &&
             !(env[ptr].span.hi_closed && piece.lo_closed)))) {
      ++ptr;
    }
    for (std::size_t q = ptr; q < env.size() && env[q].span.lo <= piece.hi; ++q) {
      if (!env[q].span.intersects(piece)) continue;
      if (!out[j] || better(env[q], *out[j])) out[j] = env[q];
    }
  }
  return out;
}

VertexFrechetDP::VertexFrechetDP(const PolyCurve& p, double delta)
    : VertexFrechetDP(p, delta, Options{}) {}

VertexFrechetDP::VertexFrechetDP(const PolyCurve& p, double delta, Options opts)
    : p_(p), delta_(delta), opts_(std::move(opts)) {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  run();
}

int VertexFrechetDP::cost_at(std::size_t v, double t) const {
  for (const auto& e : pieces_[v - 1]) {
    if (e.span.contains(t)) return e.cost;
  }
  return kInfCost;
}

void VertexFrechetDP::run() {
  const std::size_t n = p_.size();
  spines_ = compute_spines(p_, delta_, opts_.tol);
  pieces_ = elementary_intervals(spines_, opts_.extra_splits);

  // Start: the spine-1 interval holding parameter 1, which is all >= 1.
  for (auto& e : pieces_[0]) {
    bool connected = false;
    for (const auto& f : spines_.spines[0]) {
      if (f.contains(1.0) && f.intersects(e.span)) connected = true;
    }
    if (connected) e.cost = 0;
  }

  for (std::size_t v = 2; v <= n; ++v) {
    std::vector<LabeledInterval> contributions;
    for (std::size_t u = 1; u < v; ++u) {
      ReachabilityFrontier entries;
      const auto& src = pieces_[u - 1];
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i].cost < kInfCost) {
          entries.push_back({src[i].span, src[i].cost, static_cast<int>(i), 0});
        }
      }
      if (entries.empty()) continue;
      const Segment shortcut{p_.vertex(u), p_.vertex(v)};
      for (LabeledInterval r :
           reach_through_strip(p_, shortcut, delta_, entries, opts_.tol)) {
        r.cost += 1;
        r.tag = static_cast<int>(u);
        contributions.push_back(r);
      }
    }
    auto& dst = pieces_[v - 1];
    const auto won = subdivide(contributions, dst);
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (!won[j]) continue;
      dst[j].cost = won[j]->cost;
      dst[j].pred_spine = static_cast<std::size_t>(won[j]->tag);
      dst[j].pred_piece = won[j]->source;
    }
  }

  // The answer sits on the point piece {n} of spine n.
  const auto& last = pieces_[n - 1];
  int at = -1;
  for (std::size_t j = 0; j < last.size(); ++j) {
    if (last[j].span.contains(static_cast<double>(n))) at = static_cast<int>(j);
  }
  result_ = SimplificationResult{};
  if (at < 0 || last[static_cast<std::size_t>(at)].cost >= kInfCost) {
    result_.note = "no reachable end cell";
    return;
  }
  std::vector<std::size_t> seq{n};
  std::size_t v = n;
  int j = at;
  while (v != 1) {
    const ElementaryInterval& e = pieces_[v - 1][static_cast<std::size_t>(j)];
    v = e.pred_spine;
    j = e.pred_piece;
    seq.push_back(v);
  }
  std::reverse(seq.begin(), seq.end());
  result_.indices = seq;
  for (std::size_t idx : seq) {
    result_.points.push_back(p_.vertex(idx));
    result_.params.push_back(static_cast<double>(idx));
  }
  result_.link_count = seq.size() - 1;
  result_.achieved = true;
}

SimplificationResult min_link_simplify_vr(const PolyCurve& p, double delta,
                                          const Tolerances& tol) {
  VertexFrechetDP::Options opts;
  opts.tol = tol;
  return VertexFrechetDP(p, delta, std::move(opts)).result();
}

}  // namespace minlink
