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

#ifndef MINLINK_RESULT_HPP
#define MINLINK_RESULT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "minlink/geom.hpp"

namespace minlink {

/// Output of every simplifier. `indices` (1-based) is filled by the
/// vertex-restricted solvers; `params` holds curve parameters of the
/// vertices when they lie on P; `spans` holds, per link, the subcurve of P
/// the link was validated against (non-restricted solver only).
struct SimplificationResult {
  std::vector<Point> points;
  std::vector<std::size_t> indices;
  std::vector<double> params;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t link_count = 0;
  bool achieved = false;
  std::string note;

  PolyCurve curve() const { return PolyCurve(points); }
};

}  // namespace minlink

#endif  // MINLINK_RESULT_HPP
