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

#ifndef MINLINK_SUBSET_SUM_HPP
#define MINLINK_SUBSET_SUM_HPP

#include <cstdint>
#include <vector>

namespace minlink {

/// Subset Sum: is there a sub-multiset of `a` summing to `target`?
struct SubsetSumInstance {
  std::vector<std::int64_t> a;
  std::int64_t target = 0;
};

}  // namespace minlink

#endif  // MINLINK_SUBSET_SUM_HPP
