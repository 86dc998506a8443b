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

#include "minlink/oracles.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "minlink/frechet.hpp"

namespace minlink {
namespace {

using Feasible = std::function<bool(const std::vector<std::size_t>&)>;

class Clock {
 public:
  explicit Clock(const OracleBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    if (++count_ > budget_.max_subsets) throw OracleBudgetExceeded("subset cap hit");
    if ((count_ & 63) == 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > budget_.time_cap_seconds) throw OracleBudgetExceeded("time cap hit");
    }
  }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t count_ = 0;
};

std::vector<std::size_t> with_ends(std::size_t n, const std::vector<std::size_t>& mid) {
  std::vector<std::size_t> s{1};
  s.insert(s.end(), mid.begin(), mid.end());
  s.push_back(n);
  return s;
}

// Interior vertices 2..n-1 chosen by size, lexicographic within a size.
int by_size(std::size_t n, const Feasible& ok, Clock& clock) {
  const std::size_t inner = n - 2;
  for (std::size_t k = 0; k <= inner; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      clock.tick();
      std::vector<std::size_t> mid(k);
      for (std::size_t i = 0; i < k; ++i) mid[i] = pick[i] + 2;
      if (ok(with_ends(n, mid))) return static_cast<int>(k + 1);
      // next combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == inner - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return -1;
}

int by_mask(std::size_t n, const Feasible& ok, Clock& clock) {
  const std::size_t inner = n - 2;
  int best = -1;
  for (std::size_t mask = (std::size_t{1} << inner); mask-- > 0;) {
    clock.tick();
    std::vector<std::size_t> mid;
    for (std::size_t b = 0; b < inner; ++b) {
      if (mask & (std::size_t{1} << b)) mid.push_back(b + 2);
    }
    const int links = static_cast<int>(mid.size() + 1);
    if (best >= 0 && links >= best) continue;
    if (ok(with_ends(n, mid))) best = links;
  }
  return best;
}

int run(const PolyCurve& p, const OracleBudget& budget, EnumOrder order,
        const Feasible& ok) {
  if (p.size() > budget.max_n) {
    throw OracleBudgetExceeded("curve has " + std::to_string(p.size()) +
                               " vertices, oracle limit is " +
                               std::to_string(budget.max_n));
  }
  Clock clock(budget);
  return order == EnumOrder::kBySize ? by_size(p.size(), ok, clock)
                                     : by_mask(p.size(), ok, clock);
}

PolyCurve pick(const PolyCurve& p, const std::vector<std::size_t>& s) {
  std::vector<Point> pts;
  for (std::size_t i : s) pts.push_back(p.vertex(i));
  return PolyCurve(std::move(pts));
}

}  // namespace

int brute_vr_frechet(const PolyCurve& p, double delta, const OracleBudget& budget,
                     EnumOrder order, const Tolerances& tol) {
  return run(p, budget, order, [&](const std::vector<std::size_t>& s) {
    return decide_frechet(p, pick(p, s), delta, tol);
  });
}

int brute_vr_hausdorff(const PolyCurve& p, double delta, const OracleBudget& budget,
                       EnumOrder order, const Tolerances& tol) {
  return run(p, budget, order, [&](const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (!segment_in_tube({p.vertex(s[i]), p.vertex(s[i + 1])}, p, delta, tol)) {
        return false;
      }
    }
    return true;
  });
}

std::optional<std::vector<std::size_t>> subset_sum_witness(const SubsetSumInstance& inst) {
  const std::size_t n = inst.a.size();
  if (n > 20) throw OracleBudgetExceeded("subset_sum_brute handles at most 20 items");
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sum += inst.a[i];
    }
    if (sum == inst.target) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) idx.push_back(i);
      }
      return idx;
    }
  }
  return std::nullopt;
}

bool subset_sum_brute(const SubsetSumInstance& inst) {
  return subset_sum_witness(inst).has_value();
}

}  // namespace minlink
