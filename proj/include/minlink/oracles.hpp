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

#ifndef MINLINK_ORACLES_HPP
#define MINLINK_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minlink/geom.hpp"
#include "minlink/subset_sum.hpp"

namespace minlink {

struct OracleBudget {
  std::size_t max_n = 9;
  std::size_t max_subsets = std::size_t{1} << 20;
  double time_cap_seconds = 60.0;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EnumOrder {
  kBySize,         // combinations of growing size, first feasible wins
  kMaskDescending  // every interior subset, all 2^(n-2) masks from the top
};

/// Fewest links over vertex subsequences 1 = s_1 < ... < s_k = n whose curve
/// is within global Frechet distance delta of P.
int brute_vr_frechet(const PolyCurve& p, double delta, const OracleBudget& budget = {},
                     EnumOrder order = EnumOrder::kBySize, const Tolerances& tol = {});

/// Same, with every link inside the delta-tube of P.
int brute_vr_hausdorff(const PolyCurve& p, double delta,
                       const OracleBudget& budget = {},
                       EnumOrder order = EnumOrder::kBySize,
                       const Tolerances& tol = {});

/// Full enumeration, n <= 20.
bool subset_sum_brute(const SubsetSumInstance& inst);
/// 0-based indices of the first subset (by bitmask) hitting the target.
std::optional<std::vector<std::size_t>> subset_sum_witness(const SubsetSumInstance& inst);

}  // namespace minlink

#endif  // MINLINK_ORACLES_HPP
