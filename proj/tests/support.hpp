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

// Shared helpers for the test binaries: seeded curve generators and a
// discrete-Frechet reference on densified curves.

#ifndef MINLINK_TESTS_SUPPORT_HPP
#define MINLINK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "minlink/geom.hpp"
#include "minlink/subset_sum.hpp"

namespace minlink::testing {

inline PolyCurve random_curve(std::mt19937_64& rng, std::size_t n, std::size_t d,
                              double scale = 10.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<Point> pts;
  while (pts.size() < n) {
    std::vector<double> c(d);
    for (double& x : c) x = u(rng);
    Point p(std::move(c));
    if (!pts.empty() && (p == pts.back() || (pts.size() + 1 == n && p == pts.front()))) {
      continue;
    }
    pts.push_back(std::move(p));
  }
  return PolyCurve(std::move(pts));
}

inline std::vector<double> pairwise_distances(const PolyCurve& p) {
  std::vector<double> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    for (std::size_t j = i + 1; j <= p.size(); ++j) {
      out.push_back(distance(p.vertex(i), p.vertex(j)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Nearest-rank quantile, q in [0, 1].
inline double quantile(const std::vector<double>& sorted, double q) {
  const auto idx = static_cast<std::size_t>(
      std::round(q * static_cast<double>(sorted.size() - 1)));
  return sorted[idx];
}

/// Points of P every `step` units of arc length, vertices included.
inline std::vector<Point> densify(const PolyCurve& p, double step) {
  std::vector<Point> out{p.vertex(1)};
  for (std::size_t k = 1; k < p.size(); ++k) {
    const Segment e = p.edge(k);
    const auto pieces = static_cast<std::size_t>(std::ceil(e.length() / step));
    for (std::size_t s = 1; s <= pieces; ++s) {
      out.push_back(e.at(static_cast<double>(s) / static_cast<double>(pieces)));
    }
  }
  return out;
}

inline double discrete_frechet(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<double> prev(b.size()), cur(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = distance(a[i], b[j]);
      if (i == 0 && j == 0) {
        cur[j] = d;
      } else if (i == 0) {
        cur[j] = std::max(cur[j - 1], d);
      } else if (j == 0) {
        cur[j] = std::max(prev[j], d);
      } else {
        cur[j] = std::max(std::min({prev[j], prev[j - 1], cur[j - 1]}), d);
      }
    }
    std::swap(prev, cur);
  }
  return prev.back();
}

struct Instance {
  PolyCurve curve;
  double delta;
};

/// 200 seeded curves (d in 1..3, n in 4..9), each at the 25/50/75% quantiles
/// of its pairwise vertex distances.
inline std::vector<Instance> acceptance_corpus() {
  std::vector<Instance> out;
  for (std::size_t k = 0; k < 200; ++k) {
    std::mt19937_64 rng(1000 + k);
    const std::size_t d = 1 + k % 3;
    const std::size_t n = 4 + (k / 3) % 6;
    PolyCurve p = random_curve(rng, n, d);
    const auto dists = pairwise_distances(p);
    for (double q : {0.25, 0.5, 0.75}) out.push_back({p, quantile(dists, q)});
  }
  return out;
}

// Random instance with a_i <= 20 whose last element satisfies 0.5 a_n < B.
inline SubsetSumInstance random_subset_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 6), val(1, 20);
  SubsetSumInstance inst;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) inst.a.push_back(val(rng));
  std::int64_t total = 0;
  for (auto x : inst.a) total += x;
  std::uniform_int_distribution<std::int64_t> tgt(1, total + 3);
  do {
    inst.target = tgt(rng);
  } while (!(inst.a.back() < 2 * inst.target));
  return inst;
}

}  // namespace minlink::testing

#endif  // MINLINK_TESTS_SUPPORT_HPP
