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

#include "minlink/curve1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minlink {
namespace {
// Pulls shorter than this are rounding noise: delta is often itself a
// distance between two vertices, so b - delta lands on the man exactly.
constexpr double kSlack = 1e-12;
}  // namespace

SimplificationResult greedy_simplify_1d(const PolyCurve& p, double delta,
                                        Curve1dStats* stats) {
  if (p.dim() != 1) throw std::invalid_argument("greedy_simplify_1d needs a 1D curve");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  const std::size_t n = p.size();
  auto x = [&p](std::size_t i) { return p.vertex(i)[0]; };
  std::size_t visits = 0;

  SimplificationResult r;
  auto push = [&r](double param, double value) {
    r.params.push_back(param);
    r.points.push_back(Point{value});
  };
  push(1.0, x(1));

  double man = x(1);
  int dir = 0;             // direction of the man's current run
  std::size_t anchor = 1;  // extreme of the previous run
  std::size_t extreme = 1; // where the dog pulled the man furthest in this run

  // The man reverses at `man`: find the last parameter in [anchor, extreme]
  // where P takes that value, walking back from the extreme.
  auto emit = [&]() {
    for (std::size_t e = extreme; e > anchor; --e) {
      ++visits;
      const double a = x(e - 1), b = x(e);
      if ((man - a) * (man - b) <= 0.0) {
        double s = static_cast<double>(e - 1) + (man - a) / (b - a);
        s = std::clamp(s, static_cast<double>(e - 1), static_cast<double>(e));
        push(s, man);
        return;
      }
    }
    push(static_cast<double>(anchor), man);
  };

  for (std::size_t k = 1; k < n; ++k) {
    ++visits;
    const double a = x(k), b = x(k + 1);
    const double slack = kSlack * (std::abs(b) + delta + 1.0);
    int pull = 0;
    double target = man;
    if (b > a && b - delta > man + slack) {
      pull = 1;
      target = b - delta;
    } else if (b < a && b + delta < man - slack) {
      pull = -1;
      target = b + delta;
    }
    if (pull == 0) continue;
    if (dir == -pull) {
      emit();
      anchor = extreme;
    }
    dir = pull;
    man = target;
    extreme = k + 1;
  }

  const double last = x(n);
  const double slack = kSlack * (std::abs(last) + delta + 1.0);
  if ((dir == 1 && last < man - slack) || (dir == -1 && last > man + slack)) emit();
  push(static_cast<double>(n), last);

  r.link_count = r.points.size() - 1;
  r.achieved = true;
  if (stats != nullptr) stats->vertex_visits = visits;
  return r;
}

}  // namespace minlink
