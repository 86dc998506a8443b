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

#include "minlink/gadget.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace minlink {
namespace {

using Kind = GadgetLevel::Kind;

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

// p + q sqrt(r), r >= 0.
struct Surd {
  Rational p = 0, q = 0, r = 0;
};

Surd rational(const Rational& x) { return {x, 0, 0}; }

int sgn(const Rational& x) { return x.sign(); }

// sign(A + B sqrt(r))
int sign2(const Rational& a, const Rational& b, const Rational& r) {
  const int sa = sgn(a);
  const int sb = sgn(r) == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return sgn(a * a - b * b * r) * sa;
}

// sign(A + B sqrt(r1) + C sqrt(r2))
int sign3(const Rational& a, const Rational& b, const Rational& r1, const Rational& c,
          const Rational& r2) {
  const int sx = sign2(a, b, r1);
  const int sy = sgn(r2) == 0 ? 0 : sgn(c);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // |X| against |Y| through X^2 - Y^2.
  const int d = sign2(a * a + b * b * r1 - c * c * r2, 2 * a * b, r1);
  return d * sx;
}

int cmp(const Surd& u, const Surd& v) { return sign3(u.p - v.p, u.q, u.r, -v.q, v.r); }

struct SurdInterval {
  Surd lo, hi;
  bool empty = true;
};

SurdInterval make(Surd lo, Surd hi) {
  SurdInterval s{std::move(lo), std::move(hi), false};
  s.empty = cmp(s.lo, s.hi) > 0;
  return s;
}

Rational dot(const RPoint& u, const RPoint& v) { return u.x * v.x + u.y * v.y; }
Rational cross(const RPoint& u, const RPoint& v) { return u.x * v.y - u.y * v.x; }
RPoint sub(const RPoint& u, const RPoint& v) { return {u.x - v.x, u.y - v.y}; }

// Parameters t in [0, 1] with |a + t (b - a) - c| <= delta.
SurdInterval disk(const RPoint& a, const RPoint& b, const RPoint& c, const Rational& delta) {
  const RPoint ab = sub(b, a), ca = sub(a, c);
  const Rational qa = dot(ab, ab), qb = 2 * dot(ca, ab), qc = dot(ca, ca) - delta * delta;
  if (sgn(qa) == 0) {
    return sgn(qc) <= 0 ? make(rational(0), rational(1)) : SurdInterval{};
  }
  const Rational disc = qb * qb - 4 * qa * qc;
  if (sgn(disc) < 0) return {};
  const Rational mid = -qb / (2 * qa), half = Rational(1) / (2 * qa);
  return make({mid, -half, disc}, {mid, half, disc});
}

// Parameters whose point projects onto the edge c0 c1 within delta of it.
SurdInterval slab(const RPoint& a, const RPoint& b, const RPoint& c0, const RPoint& c1,
                  const Rational& delta) {
  const RPoint e = sub(c1, c0), ab = sub(b, a), ac = sub(a, c0);
  const Rational len2 = dot(e, e);
  if (sgn(len2) == 0) return {};
  Surd lo = rational(0), hi = rational(1);
  auto tighten = [&](const Surd& l, const Surd& h) {
    if (cmp(l, lo) > 0) lo = l;
    if (cmp(h, hi) < 0) hi = h;
  };
  const Rational u0 = dot(ac, e), u1 = dot(ab, e);
  if (sgn(u1) == 0) {
    if (sgn(u0) < 0 || u0 > len2) return {};
  } else if (sgn(u1) > 0) {
    tighten(rational(-u0 / u1), rational((len2 - u0) / u1));
  } else {
    tighten(rational((len2 - u0) / u1), rational(-u0 / u1));
  }
  const Rational w0 = cross(e, ac), w1 = cross(e, ab);
  if (sgn(w1) == 0) {
    if (w0 * w0 > delta * delta * len2) return {};
  } else {
    const Rational mid = -w0 / w1;
    Rational q = delta / w1;
    if (sgn(q) < 0) q = -q;
    tighten({mid, -q, len2}, {mid, q, len2});
  }
  return make(lo, hi);
}

std::vector<RPoint> build_vertices(const SubsetSumInstance& inst, const Rational& d,
                                   const Rational& g, const Rational& z,
                                   std::vector<GadgetLevel>& levels) {
  const int n = static_cast<int>(inst.a.size());
  auto a = [&](int i) { return Rational(inst.a[i - 1]); };
  const Rational g4 = g / 4, g2 = g / 2, g34 = 3 * g / 4;
  std::vector<RPoint> v;
  auto level = [&](Kind kind, int index, std::size_t first, const Rational& y) {
    levels.push_back({kind, index, first, v.size() - 1, y});
  };

  v.insert(v.end(), {{0, 0}, {g4, 0}, {g2, g2 + z}, {g34, 0}, {a(1) / 2 + g4, 0},
                     {a(1) / 2 + g2, g2 + z}, {a(1) / 2 + g34, 0}, {d, 0}});
  level(Kind::kR, 0, 0, 0);
  auto m = [&](int i) {
    const Rational y = (4 * i - 1) * d + (2 * i - frac(1, 2)) * g;
    v.insert(v.end(), {{(4 * i + 1) * d, y}, {(4 * i + 3) * d + g, y}});
  };
  m(0);
  for (int i = 1; i < n; ++i) {
    const Rational yl = (4 * i - 2) * d + (2 * i - 1) * g;
    const std::size_t lf = v.size();
    v.insert(v.end(), {{(4 * i - 1) * d + g, yl},
                       {a(i) / 2 + g34, yl},
                       {a(i) / 2 + g2, yl - g2 - z},
                       {a(i) / 2 + g4, yl},
                       {g34, yl},
                       {g2, yl - g2 - z},
                       {0, yl + g2 + z},
                       {-g4, yl},
                       {(2 - 4 * i) * d, yl}});
    level(Kind::kL, i, lf, yl);
    const Rational yf = (4 * i - 3) * d + (2 * i - frac(3, 2)) * g;
    v.insert(v.end(), {{(2 - 4 * i) * d, yf}, {-4 * i * d - g, yf}});
    const Rational yr = 4 * i * d + 2 * i * g;
    const std::size_t rf = v.size();
    v.insert(v.end(), {{-4 * i * d - g, yr},
                       {-g4, yr},
                       {0, yr - g2 - z},
                       {g2, yr + g2 + z},
                       {g34, yr},
                       {a(i + 1) / 2 + g4, yr},
                       {a(i + 1) / 2 + g2, yr + g2 + z},
                       {a(i + 1) / 2 + g34, yr},
                       {(4 * i + 1) * d, yr}});
    level(Kind::kR, i, rf, yr);
    m(i);
  }
  const Rational yt = (4 * n - 2) * d + (2 * n - 1) * g;
  const Rational ytop = (4 * n - 1) * d + (2 * n - frac(1, 2)) * g;
  v.insert(v.end(), {{(4 * n - 1) * d + g, ytop}, {(4 - 4 * n) * d - g, ytop}});
  const std::size_t tf = v.size();
  v.insert(v.end(), {{(4 - 4 * n) * d - g, yt},
                     {g4, yt},
                     {g2, yt - g2 - z},
                     {g34, yt},
                     {a(n) / 2 + g4, yt},
                     {a(n) / 2 + g2, yt - g2 - z},
                     {a(n) / 2 + g34, yt},
                     {Rational(inst.target) + n * g, yt}});
  level(Kind::kT, n, tf, yt);
  return v;
}

// Holes sit where a spike of the lower level pointing up faces a spike of
// the upper level pointing down.
std::vector<GadgetGap> find_gaps(const std::vector<RPoint>& v,
                                 const std::vector<GadgetLevel>& levels) {
  std::vector<GadgetGap> gaps;
  for (std::size_t g = 0; g + 1 < levels.size(); ++g) {
    const GadgetLevel& lo = levels[g];
    const GadgetLevel& hi = levels[g + 1];
    GadgetGap gap;
    gap.y = (lo.y + hi.y) / 2;
    for (std::size_t i = lo.first; i <= lo.last; ++i) {
      if (v[i].y <= lo.y) continue;
      for (std::size_t j = hi.first; j <= hi.last; ++j) {
        if (v[j].y < hi.y && v[j].x == v[i].x) gap.holes.push_back(v[i].x);
      }
    }
    std::sort(gap.holes.begin(), gap.holes.end());
    gaps.push_back(std::move(gap));
  }
  return gaps;
}

struct CurveParam {
  std::size_t edge = 0;
  Rational t = 0;
};

bool before(const CurveParam& u, const CurveParam& v) {
  return u.edge < v.edge || (u.edge == v.edge && u.t < v.t);
}

// First position of p on the level strictly after `after`.
std::optional<CurveParam> locate(const GadgetCurve& c, const GadgetLevel& lv, const RPoint& p,
                                 const std::optional<CurveParam>& after) {
  for (std::size_t e = lv.first; e < lv.last; ++e) {
    const RPoint& s = c.vertices[e];
    const RPoint d = sub(c.vertices[e + 1], s), sp = sub(p, s);
    if (sgn(cross(d, sp)) != 0) continue;
    const Rational len2 = dot(d, d), u = dot(sp, d);
    if (sgn(u) < 0 || u > len2) continue;
    const CurveParam here{e, u / len2};
    if (!after || before(*after, here)) return here;
  }
  return std::nullopt;
}

std::string str(const Rational& x) { return x.str(); }

}  // namespace

std::string GadgetLevel::name() const {
  switch (kind) {
    case Kind::kR:
      return "r^" + std::to_string(index);
    case Kind::kL:
      return "l^" + std::to_string(index);
    case Kind::kT:
      break;
  }
  return "t";
}

PolyCurve GadgetCurve::to_float() const {
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  for (const auto& q : vertices) pts.push_back(Point{q.x.convert_to<double>(), q.y.convert_to<double>()});
  return PolyCurve(std::move(pts));
}

GadgetCurve generate_gadget(const SubsetSumInstance& inst, const GadgetParams& params) {
  if (inst.a.empty()) throw GadgetError("the set must not be empty");
  if (inst.target <= 0) throw GadgetError("the target must be positive");
  for (auto x : inst.a) {
    if (x <= 0) throw GadgetError("set elements must be positive");
  }
  if (!(inst.a.back() < 2 * inst.target)) {
    throw GadgetError("ordering violates 0.5 a_n < B: last element " +
                      std::to_string(inst.a.back()) + ", target " +
                      std::to_string(inst.target));
  }
  GadgetCurve c;
  c.instance = inst;
  c.delta = Rational(*std::max_element(inst.a.begin(), inst.a.end()));
  c.gamma = params.gamma == 0 ? c.delta / Rational(1 << 20) : params.gamma;
  c.zeta = params.zeta;
  if (c.gamma <= 0 || c.zeta < 0) throw GadgetError("need gamma > 0 and zeta >= 0");
  if (c.gamma * (1 << 20) > c.delta || c.zeta * (1 << 20) > c.gamma) {
    throw GadgetError("need zeta <= gamma / 2^20 and gamma <= delta / 2^20");
  }
  c.k = 2 * static_cast<int>(inst.a.size()) - 1;
  c.vertices = build_vertices(inst, c.delta, c.gamma, c.zeta, c.levels);
  c.gaps = find_gaps(c.vertices, c.levels);
  return c;
}

HolePath hole_path(const GadgetCurve& curve, const std::vector<bool>& choices) {
  HolePath path;
  path.choices = choices;
  RPoint cur = curve.vertices.front();
  path.vertices.push_back(cur);
  path.hosts.push_back(0);
  std::size_t pick = 0;
  for (std::size_t g = 0; g < curve.gaps.size(); ++g) {
    const auto& holes = curve.gaps[g].holes;
    if (holes.empty()) throw GadgetError("gap without a hole");
    std::size_t h = 0;
    if (holes.size() > 1) {
      if (pick >= choices.size()) throw GadgetError("too few hole choices");
      h = choices[pick++] ? holes.size() - 1 : 0;
    }
    cur = {2 * holes[h] - cur.x, curve.levels[g + 1].y};
    path.vertices.push_back(cur);
    path.hosts.push_back(g + 1);
  }
  return path;
}

std::optional<HolePath> solve_gadget(const GadgetCurve& curve) {
  const std::size_t n = curve.instance.a.size();
  if (curve.levels.size() != 2 * n || curve.gaps.size() + 1 != curve.levels.size()) {
    throw GadgetError("malformed gadget metadata");
  }
  std::size_t two_hole = 0;
  for (const auto& g : curve.gaps) two_hole += g.holes.size() > 1 ? 1 : 0;
  const RPoint& goal = curve.vertices.back();
  for (std::size_t mask = 0; mask < (std::size_t{1} << two_hole); ++mask) {
    std::vector<bool> choices(two_hole);
    for (std::size_t b = 0; b < two_hole; ++b) choices[b] = (mask >> b) & 1;
    HolePath p = hole_path(curve, choices);
    if (p.vertices.back() == goal) return p;
  }
  return std::nullopt;
}

std::set<Rational> reachable_x_set(const GadgetCurve& curve, int i) {
  const int n = static_cast<int>(curve.instance.a.size());
  if (i < 1 || i > n) throw GadgetError("level index out of range");
  const std::size_t target = 2 * static_cast<std::size_t>(i) - 1;
  std::set<Rational> xs{curve.vertices.front().x};
  for (std::size_t g = 0; g < target; ++g) {
    std::set<Rational> next;
    for (const auto& x : xs) {
      for (const auto& h : curve.gaps[g].holes) next.insert(2 * h - x);
    }
    xs = std::move(next);
  }
  return xs;
}

Rational skip_vertex_x(const GadgetCurve& curve, SkipTarget level, int i, HoleSide side) {
  const int n = static_cast<int>(curve.instance.a.size());
  if (i < 1 || i > n - 1) throw GadgetError("skip level index out of range");
  // gaps[2i - 2] lies below l^i, gaps[2i - 1] between l^i and r^i, gaps[2i]
  // above r^i.
  const std::size_t first = level == SkipTarget::kL ? 2 * i - 2 : 2 * i - 1;
  const GadgetGap& ga = curve.gaps[first];
  const GadgetGap& gb = curve.gaps[first + 1];
  auto hole = [&](const GadgetGap& g) {
    return side == HoleSide::kLeft || g.holes.size() == 1 ? g.holes.front() : g.holes.back();
  };
  const Rational ha = hole(ga), hb = hole(gb);
  const Rational y = curve.levels[first].y;
  return ha + (y - ga.y) * (hb - ha) / (gb.y - ga.y);
}

bool link_in_tube(const GadgetCurve& curve, const RPoint& a, const RPoint& b) {
  std::vector<SurdInterval> cover;
  const auto& v = curve.vertices;
  for (std::size_t e = 0; e + 1 < v.size(); ++e) {
    SurdInterval u;
    for (const SurdInterval& piece : {disk(a, b, v[e], curve.delta),
                                      disk(a, b, v[e + 1], curve.delta),
                                      slab(a, b, v[e], v[e + 1], curve.delta)}) {
      if (piece.empty) continue;
      if (u.empty) {
        u = piece;
        continue;
      }
      if (cmp(piece.lo, u.lo) < 0) u.lo = piece.lo;
      if (cmp(piece.hi, u.hi) > 0) u.hi = piece.hi;
    }
    if (u.empty) continue;
    if (cmp(u.lo, rational(0)) < 0) u.lo = rational(0);
    if (cmp(u.hi, rational(1)) > 0) u.hi = rational(1);
    if (cmp(u.lo, u.hi) <= 0) cover.push_back(u);
  }
  std::sort(cover.begin(), cover.end(),
            [](const SurdInterval& x, const SurdInterval& y) { return cmp(x.lo, y.lo) < 0; });
  Surd reach = rational(0);
  bool started = false;
  for (const auto& u : cover) {
    if (cmp(u.lo, reach) > 0) return false;
    if (!started || cmp(u.hi, reach) > 0) reach = u.hi;
    started = true;
  }
  return started && cmp(reach, rational(1)) >= 0;
}

VerifyReport verify_simplification(const GadgetCurve& curve, const HolePath& path) {
  const auto& pv = path.vertices;
  if (pv.size() < 2 || static_cast<int>(pv.size()) - 1 != curve.k) {
    return {false, "expected " + std::to_string(curve.k) + " links, got " +
                       std::to_string(pv.empty() ? 0 : pv.size() - 1)};
  }
  if (!(pv.front() == curve.vertices.front())) return {false, "does not start at the curve start"};
  if (!(pv.back() == curve.vertices.back())) return {false, "does not end at the curve end"};
  if (path.hosts.size() != pv.size()) return {false, "host list does not match vertices"};
  std::optional<CurveParam> prev;
  for (std::size_t k = 0; k < pv.size(); ++k) {
    if (path.hosts[k] >= curve.levels.size()) return {false, "unknown host level"};
    const GadgetLevel& lv = curve.levels[path.hosts[k]];
    const auto at = locate(curve, lv, pv[k], prev);
    if (!at) {
      return {false, "vertex " + std::to_string(k) + " is not on " + lv.name() +
                         " after its predecessor"};
    }
    prev = at;
  }
  for (std::size_t k = 0; k + 1 < pv.size(); ++k) {
    if (!link_in_tube(curve, pv[k], pv[k + 1])) {
      return {false, "link " + std::to_string(k + 1) + " leaves the delta-neighbourhood"};
    }
  }
  return {true, ""};
}

bool decide_via_gadget(const SubsetSumInstance& inst, const GadgetParams& params) {
  SubsetSumInstance ordered = inst;
  auto& a = ordered.a;
  // Any element below 2B can go last; without one every element exceeds B.
  auto it = std::max_element(a.begin(), a.end(), [&](std::int64_t x, std::int64_t y) {
    const bool fx = x < 2 * inst.target, fy = y < 2 * inst.target;
    return fx != fy ? fy : x < y;
  });
  if (it == a.end() || !(*it < 2 * inst.target)) return false;
  std::iter_swap(it, a.end() - 1);
  return solve_gadget(generate_gadget(ordered, params)).has_value();
}

std::string gadget_to_json(const GadgetCurve& curve) {
  nlohmann::json j;
  j["kind"] = "gadget";
  j["set"] = curve.instance.a;
  j["target"] = curve.instance.target;
  j["gamma"] = str(curve.gamma);
  j["zeta"] = str(curve.zeta);
  j["delta"] = str(curve.delta);
  j["k"] = curve.k;
  j["dim"] = 2;
  nlohmann::json exact = nlohmann::json::array(), approx = nlohmann::json::array();
  for (const auto& q : curve.vertices) {
    exact.push_back({str(q.x), str(q.y)});
    approx.push_back({q.x.convert_to<double>(), q.y.convert_to<double>()});
  }
  j["exact_vertices"] = exact;
  j["vertices"] = approx;
  return j.dump(1);
}

GadgetCurve gadget_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GadgetError(std::string("gadget file is not JSON: ") + e.what());
  }
  try {
    SubsetSumInstance inst;
    inst.a = j.at("set").get<std::vector<std::int64_t>>();
    inst.target = j.at("target").get<std::int64_t>();
    GadgetParams params;
    params.gamma = Rational(j.at("gamma").get<std::string>());
    params.zeta = Rational(j.value("zeta", std::string("0")));
    GadgetCurve c = generate_gadget(inst, params);
    if (j.contains("exact_vertices")) {
      const auto& ev = j["exact_vertices"];
      if (ev.size() != c.vertices.size()) throw GadgetError("stored vertex count differs");
      for (std::size_t i = 0; i < ev.size(); ++i) {
        const RPoint q{Rational(ev[i].at(0).get<std::string>()),
                       Rational(ev[i].at(1).get<std::string>())};
        if (!(q == c.vertices[i])) {
          throw GadgetError("stored vertex " + std::to_string(i) + " differs from the construction");
        }
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw GadgetError(std::string("malformed gadget file: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const GadgetError*>(&e)) throw;
    throw GadgetError(std::string("malformed gadget file: ") + e.what());
  }
}

}  // namespace minlink
