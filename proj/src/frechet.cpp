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

#include "minlink/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace minlink {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// free ∩ [lo, inf) with the given closedness at lo.
ParamInterval at_or_after(const ParamInterval& free, double lo, bool lo_closed) {
  return free.intersect({lo, kInf, lo_closed, true});
}

bool reaches_end(const ParamInterval& iv) { return iv.contains(1.0); }

}  // namespace

bool decide_frechet(const PolyCurve& p, const PolyCurve& q, double delta,
                    const Tolerances& tol) {
  require_same_dim(p, q);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  const double r = delta * (1.0 + tol.eps_geom);
  if (squared_distance(p.vertex(1), q.vertex(1)) > r * r) return false;
  if (squared_distance(p.vertex(n), q.vertex(m)) > r * r) return false;

  // lf[i][j]: vertex i of P against edge j of Q (left side of cell (i, j)).
  // bf[i][j]: vertex j of Q against edge i of P (bottom side). 0-based.
  std::vector<std::vector<ParamInterval>> lf(n, std::vector<ParamInterval>(m - 1));
  std::vector<std::vector<ParamInterval>> bf(n - 1, std::vector<ParamInterval>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      lf[i][j] = ball_edge_free_interval(p.vertex(i + 1), delta, q.edge(j + 1), tol);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bf[i][j] = ball_edge_free_interval(q.vertex(j + 1), delta, p.edge(i + 1), tol);
    }
  }

  auto lr = lf;
  auto br = bf;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const bool ok = lf[0][j].contains(0.0) && (j == 0 || reaches_end(lr[0][j - 1]));
    if (!ok) lr[0][j] = ParamInterval::empty();
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool ok = bf[i][0].contains(0.0) && (i == 0 || reaches_end(br[i - 1][0]));
    if (!ok) br[i][0] = ParamInterval::empty();
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const ParamInterval& left = lr[i][j];
      const ParamInterval& bottom = br[i][j];
      if (!bottom.is_empty()) {
        lr[i + 1][j] = lf[i + 1][j];
      } else if (!left.is_empty()) {
        lr[i + 1][j] = at_or_after(lf[i + 1][j], left.lo, left.lo_closed);
      } else {
        lr[i + 1][j] = ParamInterval::empty();
      }
      if (!left.is_empty()) {
        br[i][j + 1] = bf[i][j + 1];
      } else if (!bottom.is_empty()) {
        br[i][j + 1] = at_or_after(bf[i][j + 1], bottom.lo, bottom.lo_closed);
      } else {
        br[i][j + 1] = ParamInterval::empty();
      }
    }
  }
  return reaches_end(lr[n - 1][m - 2]) || reaches_end(br[n - 2][m - 1]);
}

double frechet_distance(const PolyCurve& p, const PolyCurve& q, double tol) {
  require_same_dim(p, q);
  double lo = std::max(distance(p.vertex(1), q.vertex(1)),
                       distance(p.vertex(p.size()), q.vertex(q.size())));
  double hi = lo;
  for (const Point& a : p.vertices()) {
    for (const Point& b : q.vertices()) hi = std::max(hi, distance(a, b));
  }
  // The decision carries its own relative slack; bisect with an exact one.
  const Tolerances exact{0.0, Tolerances{}.densify_step};
  if (decide_frechet(p, q, lo, exact)) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (decide_frechet(p, q, mid, exact)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ParamInterval capsule_cover_interval(const Segment& edge, double delta,
                                     const Segment& seg, const Tolerances& tol) {
  require_same_dim(edge.a, seg.a);
  ParamInterval acc = ParamInterval::empty();
  auto absorb = [&acc](const ParamInterval& iv) {
    if (iv.is_empty()) return;
    if (acc.is_empty()) {
      acc = ParamInterval::closed(iv.lo, iv.hi);
    } else {
      acc.lo = std::min(acc.lo, iv.lo);
      acc.hi = std::max(acc.hi, iv.hi);
    }
  };
  absorb(ball_edge_free_interval(edge.a, delta, seg, tol));
  absorb(ball_edge_free_interval(edge.b, delta, seg, tol));

  // Slab around the edge's interior: perpendicular distance <= delta with the
  // foot of the perpendicular inside the edge.
  const Point e = edge.b - edge.a;
  const double len2 = squared_norm(e);
  if (len2 == 0.0) return acc;
  const Point w = seg.a - edge.a;
  const Point dv = seg.b - seg.a;
  const double we = dot(w, e) / len2;
  const double de = dot(dv, e) / len2;
  ParamInterval foot = ParamInterval::closed(0.0, 1.0);
  if (de == 0.0) {
    if (we < 0.0 || we > 1.0) return acc;
  } else {
    double t0 = (0.0 - we) / de;
    double t1 = (1.0 - we) / de;
    if (t0 > t1) std::swap(t0, t1);
    foot = foot.intersect(ParamInterval::closed(t0, t1));
  }
  const Point wp = w - e * we;
  const Point dp = dv - e * de;
  const double r = delta * (1.0 + tol.eps_geom);
  const double qa = squared_norm(dp);
  const double qb = 2.0 * dot(wp, dp);
  const double qc = squared_norm(wp) - r * r;
  ParamInterval band;
  if (qa <= 1e-300) {
    band = qc <= 0.0 ? ParamInterval::closed(0.0, 1.0) : ParamInterval::empty();
  } else {
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0 && disc >= -tol.eps_geom * (qb * qb + 4.0 * qa * std::abs(qc))) {
      disc = 0.0;
    }
    if (disc < 0.0) {
      band = ParamInterval::empty();
    } else {
      const double sq = std::sqrt(disc);
      const double qq = -0.5 * (qb + std::copysign(sq, qb));
      double t1 = 0.0, t2 = 0.0;
      if (qq == 0.0) {
        t1 = t2 = -qb / (2.0 * qa);
      } else {
        t1 = qq / qa;
        t2 = qc / qq;
        if (t1 > t2) std::swap(t1, t2);
      }
      band = ParamInterval::closed(t1, t2);
    }
  }
  absorb(band.intersect(foot).intersect(ParamInterval::closed(0.0, 1.0)));
  return acc;
}

bool segment_in_tube(const Segment& seg, const PolyCurve& p, double delta,
                     const Tolerances& tol) {
  require_same_dim(seg.a, p.vertex(1));
  std::vector<ParamInterval> cover;
  for (std::size_t k = 1; k < p.size(); ++k) {
    ParamInterval iv = capsule_cover_interval(p.edge(k), delta, seg, tol);
    if (!iv.is_empty()) cover.push_back(iv);
  }
  std::sort(cover.begin(), cover.end(),
            [](const ParamInterval& a, const ParamInterval& b) { return a.lo < b.lo; });
  double reach = 0.0;
  bool started = false;
  for (const ParamInterval& iv : cover) {
    if (iv.lo > reach + tol.eps_geom) break;
    if (!started && iv.lo > tol.eps_geom) break;
    started = true;
    reach = std::max(reach, iv.hi);
    if (reach >= 1.0 - tol.eps_geom) return true;
  }
  return false;
}

ReachabilityFrontier lower_envelope(const std::vector<LabeledInterval>& items) {
  std::vector<double> vals;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].span.is_empty()) continue;
    vals.push_back(items[i].span.lo);
    vals.push_back(items[i].span.hi);
    order.push_back(i);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = items[a].span;
    const auto& y = items[b].span;
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.lo_closed && !y.lo_closed;
  });

  using Key = std::tuple<int, int, double, int, std::size_t>;
  auto key = [&](std::size_t i) {
    const auto& it = items[i];
    return Key{it.cost, it.tag, it.span.lo, it.source, i};
  };
  std::set<Key> active;
  std::size_t next = 0;
  ReachabilityFrontier out;
  const LabeledInterval* open_piece = nullptr;

  // Atoms: point vals[a], then the open gap (vals[a], vals[a+1]).
  auto emit = [&](const ParamInterval& atom) {
    // Drop expired entries from the top of the heap.
    while (!active.empty()) {
      const std::size_t i = std::get<4>(*active.begin());
      const auto& s = items[i].span;
      const bool alive = atom.is_point()
                             ? (s.hi > atom.lo || (s.hi == atom.lo && s.hi_closed))
                             : s.hi >= atom.hi;
      if (alive) break;
      active.erase(active.begin());
    }
    if (active.empty()) {
      open_piece = nullptr;
      return;
    }
    const LabeledInterval& win = items[std::get<4>(*active.begin())];
    if (open_piece != nullptr && !out.empty() && open_piece->cost == win.cost &&
        open_piece->tag == win.tag && open_piece->source == win.source) {
      out.back().span.hi = atom.hi;
      out.back().span.hi_closed = atom.hi_closed;
      return;
    }
    LabeledInterval piece = win;
    piece.span = atom;
    out.push_back(piece);
    open_piece = &win;
  };

  for (std::size_t a = 0; a < vals.size(); ++a) {
    const double s = vals[a];
    while (next < order.size() && items[order[next]].span.lo == s &&
           items[order[next]].span.lo_closed) {
      active.insert(key(order[next++]));
    }
    emit(ParamInterval::point(s));
    while (next < order.size() && items[order[next]].span.lo == s) {
      active.insert(key(order[next++]));
    }
    if (a + 1 < vals.size()) emit({s, vals[a + 1], false, false});
  }
  return out;
}

namespace {

struct StripGeometry {
  // left[k]: free y-range on the vertical line x = k (k = 1..n), index k-1.
  std::vector<ParamInterval> left;
  // top[k]: free x-range of cell k on y = 1, global parameter, index k-1.
  std::vector<ParamInterval> top;
};

StripGeometry strip_geometry(const PolyCurve& p, const Segment& shortcut, double delta,
                             const Tolerances& tol) {
  StripGeometry g;
  const std::size_t n = p.size();
  g.left.reserve(n);
  g.top.reserve(n - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    g.left.push_back(ball_edge_free_interval(p.vertex(k), delta, shortcut, tol));
  }
  for (std::size_t k = 1; k < n; ++k) {
    g.top.push_back(ball_edge_free_interval(shortcut.b, delta, p.edge(k), tol)
                        .shifted(static_cast<double>(k)));
  }
  return g;
}

// One left-to-right sweep for entries that share a cost. `ids` are indices
// into `entries`, sorted by span.lo; spans are pairwise disjoint.
void sweep(const StripGeometry& g, const ReachabilityFrontier& entries,
           const std::vector<std::size_t>& ids, int cost,
           std::vector<LabeledInterval>& out) {
  const std::size_t cells = g.top.size();
  ParamInterval left = ParamInterval::empty();
  int left_src = -1;
  std::size_t ptr = 0;
  for (std::size_t c = 0; c < cells; ++c) {
    const double k = static_cast<double>(c + 1);
    const ParamInterval cell = ParamInterval::closed(k, k + 1.0);
    while (ptr < ids.size() &&
           entries[ids[ptr]].span.intersect({k, kInf, true, true}).is_empty()) {
      ++ptr;
    }
    ParamInterval bottom = ParamInterval::empty();
    int bottom_src = -1;
    if (ptr < ids.size()) {
      bottom = entries[ids[ptr]].span.intersect(cell);
      bottom_src = entries[ids[ptr]].source;
    }
    const bool from_left = !left.is_empty();
    const bool from_bottom = !bottom.is_empty();

    ParamInterval top = ParamInterval::empty();
    int top_src = -1;
    if (from_left) {
      top = g.top[c];
      top_src = left_src;
    } else if (from_bottom) {
      top = at_or_after(g.top[c], bottom.lo, bottom.lo_closed);
      top_src = bottom_src;
    }
    if (!top.is_empty()) out.push_back({top, cost, top_src, 0});

    ParamInterval right = ParamInterval::empty();
    int right_src = -1;
    if (from_bottom) {
      right = g.left[c + 1];
      right_src = bottom_src;
    } else if (from_left) {
      right = at_or_after(g.left[c + 1], left.lo, left.lo_closed);
      right_src = left_src;
    }
    left = right;
    left_src = right_src;
  }
}

}  // namespace

ReachabilityFrontier reach_through_strip(const PolyCurve& p, const Segment& shortcut,
                                         double delta,
                                         const ReachabilityFrontier& entries,
                                         const Tolerances& tol) {
  if (entries.empty()) return {};
  const StripGeometry g = strip_geometry(p, shortcut, delta, tol);
  std::map<int, std::vector<std::size_t>> by_cost;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].span.is_empty()) by_cost[entries[i].cost].push_back(i);
  }
  std::vector<LabeledInterval> all;
  for (auto& [cost, ids] : by_cost) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return entries[a].span.lo < entries[b].span.lo;
    });
    sweep(g, entries, ids, cost, all);
  }
  return lower_envelope(all);
}

ReachabilityFrontier reach_through_strip_naive(const PolyCurve& p,
                                               const Segment& shortcut, double delta,
                                               const ReachabilityFrontier& entries,
                                               const Tolerances& tol) {
  const StripGeometry g = strip_geometry(p, shortcut, delta, tol);
  std::vector<LabeledInterval> all;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].span.is_empty()) continue;
    sweep(g, entries, {i}, entries[i].cost, all);
  }
  return lower_envelope(all);
}

}  // namespace minlink
