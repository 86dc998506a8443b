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

#include "minlink/nonrestricted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "minlink/frechet.hpp"

namespace minlink {
namespace {

constexpr int kUnseen = -1;

// Frechet decision for a single segment against a polyline. The segment must
// meet every vertex ball at parameters that never go backwards; consecutive
// vertex pairs are then matched linearly.
bool segment_matches(const Segment& seg, const PolyCurve& sub, double delta,
                     const Tolerances& tol) {
  const std::size_t m = sub.size();
  const double slack2 = [&] {
    const double w = delta * (1.0 + tol.eps_geom);
    return w * w;
  }();
  if (squared_distance(seg.a, sub.vertex(1)) > slack2) return false;
  if (squared_distance(seg.b, sub.vertex(m)) > slack2) return false;
  double run = 0.0;
  for (std::size_t k = 2; k < m; ++k) {
    const ParamInterval f = ball_edge_free_interval(sub.vertex(k), delta, seg, tol);
    if (f.is_empty() || f.hi < run) return false;
    run = std::max(run, f.lo);
  }
  return true;
}

constexpr std::size_t kLeaf = 8;

// kd-tree over the nodes of one ball. Boxes are summarised by a center and
// the radius of the enclosing sphere.
struct KdTree {
  struct Node {
    std::size_t begin = 0, end = 0;
    int left = -1, right = -1;
    Point center;
    double rho = 0.0;
  };
  std::vector<std::size_t> ids;
  std::vector<Node> nodes;
  std::vector<int> count;  // scratch: nodes of interest per subtree

  bool leaf(int v) const { return nodes[v].left < 0; }
};

class Search {
 public:
  Search(const PolyCurve& p, double delta, double eps, const Tolerances& tol,
         NonrestrictedStats& stats)
      : p_(p), n_(p.size()), d_(p.dim()), tol_(tol), stats_(stats) {
    slack_ = (1.0 + eps / 2.0) * delta;
    margin_ = 1e-7 * slack_ + 1e-12;
    first_.assign(n_ + 2, 0);
    for (std::size_t b = 1; b <= n_; ++b) {
      first_[b] = pts_.size();
      if (b == 1 || b == n_) {
        pts_.push_back(p.vertex(b));
      } else {
        const BallGrid g = ball_grid_corners(p.vertex(b), delta, eps);
        pts_.insert(pts_.end(), g.corners.begin(), g.corners.end());
      }
    }
    first_[n_ + 1] = pts_.size();
    for (std::size_t b = 0; b < pts_.size(); ++b) ball_.push_back(0);
    for (std::size_t b = 1; b <= n_; ++b) {
      for (std::size_t v = first_[b]; v < first_[b + 1]; ++v) ball_[v] = b;
    }
    level_.assign(pts_.size(), kUnseen);
    trees_.resize(n_ + 1);
    for (std::size_t b = 1; b <= n_; ++b) build(b);
    subs_.resize(n_ + 1);
    for (std::size_t i = 1; i < n_; ++i) {
      subs_[i].resize(n_ + 1);
      for (std::size_t j = i + 1; j <= n_; ++j) {
        subs_[i][j] = subcurve(p, static_cast<double>(i), static_cast<double>(j));
      }
    }
    stats_.nodes = pts_.size();
  }

  // Level of the sink, or kUnseen.
  int bfs() {
    const std::size_t sink = pts_.size() - 1;
    level_[0] = 0;
    for (int lev = 0; level_[sink] == kUnseen; ++lev) {
      bool grew = false;
      for (std::size_t i = 1; i < n_; ++i) {
        if (recount(i, [&](std::size_t v) { return level_[v] == lev; }) == 0) continue;
        for (std::size_t j = i + 1; j <= n_; ++j) {
          if (recount(j, [&](std::size_t v) { return level_[v] == kUnseen; }) == 0) continue;
          grew = expand(i, j, lev) || grew;
        }
      }
      if (!grew) return kUnseen;
    }
    return level_[sink];
  }

  std::vector<std::size_t> backtrack() const {
    std::vector<std::size_t> path{pts_.size() - 1};
    for (int lev = level_.back() - 1; lev >= 0; --lev) {
      const std::size_t cur = path.back();
      std::size_t pick = pts_.size();
      for (std::size_t i = 1; i < ball_[cur] && pick == pts_.size(); ++i) {
        for (std::size_t v = first_[i]; v < first_[i + 1]; ++v) {
          if (level_[v] == lev && edge_ok(v, cur)) {
            pick = v;
            break;
          }
        }
      }
      if (pick == pts_.size()) throw std::logic_error("grid path lost its predecessor");
      path.push_back(pick);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Point& point(std::size_t v) const { return pts_[v]; }
  std::size_t ball(std::size_t v) const { return ball_[v]; }

 private:
  void build(std::size_t b) {
    KdTree& t = trees_[b];
    for (std::size_t v = first_[b]; v < first_[b + 1]; ++v) t.ids.push_back(v);
    split(t, 0, t.ids.size());
    t.count.assign(t.nodes.size(), 0);
  }

  int split(KdTree& t, std::size_t begin, std::size_t end) {
    const int self = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    std::vector<double> lo(d_, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d_, -std::numeric_limits<double>::infinity());
    for (std::size_t k = begin; k < end; ++k) {
      const Point& q = pts_[t.ids[k]];
      for (std::size_t c = 0; c < d_; ++c) {
        lo[c] = std::min(lo[c], q[c]);
        hi[c] = std::max(hi[c], q[c]);
      }
    }
    std::vector<double> mid(d_);
    std::size_t axis = 0;
    double rho2 = 0.0;
    for (std::size_t c = 0; c < d_; ++c) {
      mid[c] = 0.5 * (lo[c] + hi[c]);
      rho2 += 0.25 * (hi[c] - lo[c]) * (hi[c] - lo[c]);
      if (hi[c] - lo[c] > hi[axis] - lo[axis]) axis = c;
    }
    t.nodes[self].begin = begin;
    t.nodes[self].end = end;
    t.nodes[self].center = Point(std::move(mid));
    t.nodes[self].rho = std::sqrt(rho2) * (1.0 + 1e-12);
    if (end - begin > kLeaf) {
      const std::size_t m = begin + (end - begin) / 2;
      std::nth_element(t.ids.begin() + begin, t.ids.begin() + m, t.ids.begin() + end,
                       [&](std::size_t a, std::size_t b) {
                         return pts_[a][axis] < pts_[b][axis];
                       });
      const int l = split(t, begin, m);
      const int r = split(t, m, end);
      t.nodes[self].left = l;
      t.nodes[self].right = r;
    }
    return self;
  }

  template <class Pred>
  int recount(std::size_t b, Pred pred) {
    KdTree& t = trees_[b];
    // Children are stored after their parent.
    for (std::size_t v = t.nodes.size(); v-- > 0;) {
      const auto& nd = t.nodes[v];
      if (nd.left < 0) {
        int c = 0;
        for (std::size_t k = nd.begin; k < nd.end; ++k) c += pred(t.ids[k]) ? 1 : 0;
        t.count[v] = c;
      } else {
        t.count[v] = t.count[nd.left] + t.count[nd.right];
      }
    }
    return t.count[0];
  }

  bool check(const Point& a, const Point& b, const PolyCurve& sub, double delta) const {
    ++stats_.validations;
    return segment_matches({a, b}, sub, delta, tol_);
  }

  bool edge_ok(std::size_t a, std::size_t b) const {
    const std::size_t i = ball_[a], j = ball_[b];
    // Every corner lies within (1 + eps/2) delta of its center, so a link
    // between consecutive balls always matches the edge.
    if (j == i + 1) return true;
    return check(pts_[a], pts_[b], subs_[i][j], slack_);
  }

  bool expand(std::size_t i, std::size_t j, int lev) {
    bool grew = false;
    pair(i, 0, j, 0, lev, grew);
    return grew;
  }

  void take_all(KdTree& tb, int vb, int lev, bool& grew) {
    const auto& nd = tb.nodes[vb];
    for (std::size_t k = nd.begin; k < nd.end; ++k) {
      if (level_[tb.ids[k]] == kUnseen) {
        level_[tb.ids[k]] = lev + 1;
        grew = true;
      }
    }
    tb.count[vb] = 0;
  }

  void pair(std::size_t i, int va, std::size_t j, int vb, int lev, bool& grew) {
    KdTree& ta = trees_[i];
    KdTree& tb = trees_[j];
    if (ta.count[va] == 0 || tb.count[vb] == 0) return;
    if (j == i + 1) {
      take_all(tb, vb, lev, grew);
      return;
    }
    const auto& na = ta.nodes[va];
    const auto& nb = tb.nodes[vb];
    const PolyCurve& sub = subs_[i][j];
    const double rho = std::max(na.rho, nb.rho);
    if (rho > 0.0) {
      if (!check(na.center, nb.center, sub, slack_ + rho + margin_)) return;
      if (slack_ - rho - margin_ >= 0.0 &&
          check(na.center, nb.center, sub, slack_ - rho - margin_)) {
        take_all(tb, vb, lev, grew);
        return;
      }
    }
    if (ta.leaf(va) && tb.leaf(vb)) {
      int left = 0;
      for (std::size_t kb = nb.begin; kb < nb.end; ++kb) {
        const std::size_t b = tb.ids[kb];
        if (level_[b] != kUnseen) continue;
        for (std::size_t ka = na.begin; ka < na.end; ++ka) {
          const std::size_t a = ta.ids[ka];
          if (level_[a] == lev && check(pts_[a], pts_[b], sub, slack_)) {
            level_[b] = lev + 1;
            grew = true;
            break;
          }
        }
        left += level_[b] == kUnseen ? 1 : 0;
      }
      tb.count[vb] = left;
      return;
    }
    const bool split_a = tb.leaf(vb) || (!ta.leaf(va) && na.rho >= nb.rho);
    if (split_a) {
      pair(i, na.left, j, vb, lev, grew);
      pair(i, na.right, j, vb, lev, grew);
    } else {
      pair(i, va, j, nb.left, lev, grew);
      pair(i, va, j, nb.right, lev, grew);
      tb.count[vb] = tb.count[nb.left] + tb.count[nb.right];
    }
  }

  const PolyCurve& p_;
  std::size_t n_, d_;
  Tolerances tol_;
  NonrestrictedStats& stats_;
  double slack_ = 0.0, margin_ = 0.0;
  std::vector<Point> pts_;
  std::vector<std::size_t> ball_, first_;
  std::vector<int> level_;
  std::vector<KdTree> trees_;
  std::vector<std::vector<PolyCurve>> subs_;
};

}  // namespace

BallGrid ball_grid_corners(const Point& p, double delta, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  BallGrid g;
  g.center = p;
  g.radius = delta;
  const std::size_t d = p.dim();
  if (delta == 0.0) {
    g.corners = {p};
    return g;
  }
  g.side = eps * delta / (2.0 * std::sqrt(static_cast<double>(d)));
  // Ball radius in lattice units is 2 sqrt(d) / eps.
  const double r2 = 4.0 * static_cast<double>(d) / (eps * eps);
  const int reach = static_cast<int>(std::ceil(std::sqrt(r2)));

  std::set<std::vector<int>> keep;
  std::vector<int> m(d, -reach - 1);
  while (true) {
    double gap2 = 0.0;
    for (int c : m) {
      const double g1 = c > 0 ? c : (c + 1 < 0 ? -(c + 1) : 0);
      gap2 += g1 * g1;
    }
    if (gap2 < r2) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<int> corner = m;
        for (std::size_t c = 0; c < d; ++c) corner[c] += (mask >> c) & 1;
        keep.insert(std::move(corner));
      }
    }
    std::size_t c = 0;
    while (c < d && m[c] == reach) m[c++] = -reach - 1;
    if (c == d) break;
    ++m[c];
  }
  g.corners.reserve(keep.size());
  for (const auto& k : keep) {
    std::vector<double> x(d);
    for (std::size_t c = 0; c < d; ++c) x[c] = p[c] + g.side * k[c];
    g.corners.emplace_back(std::move(x));
  }
  return g;
}

bool validate(const Segment& seg, const PolyCurve& sub, double delta, double eps,
              const Tolerances& tol) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  return segment_matches(seg, sub, (1.0 + eps / 2.0) * delta, tol);
}

SimplificationResult simplify_nonrestricted(const PolyCurve& p, double delta, double eps,
                                            NonrestrictedStats* stats,
                                            const Tolerances& tol) {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  NonrestrictedStats local;
  Search s(p, delta, eps, tol, stats != nullptr ? *stats : local);
  SimplificationResult r;
  if (s.bfs() < 0) {
    r.note = "no path through the grid corners";
    return r;
  }
  const auto path = s.backtrack();
  for (std::size_t k = 0; k < path.size(); ++k) {
    r.points.push_back(s.point(path[k]));
    if (k > 0) r.spans.emplace_back(s.ball(path[k - 1]), s.ball(path[k]));
  }
  r.link_count = path.size() - 1;
  r.achieved = true;
  return r;
}

}  // namespace minlink
