// Copyright 2026 The Authors.
//
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

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {

enum class Direction { kMinimize, kMaximize };

inline std::string_view to_string(Direction d) {
  return d == Direction::kMinimize ? "min" : "max";
}

struct OptResult {
  Subset argset;
  double value = 0.0;
  std::int64_t evaluations = 0;
  // (set, value) after each accepted move, starting with the start set.
  std::vector<std::pair<Subset, double>> trace;
};

// Exact optimum over all 2^n subsets; ties go to the smallest mask.
template <SetFunction F>
OptResult brute_force_optimize(const F& f, Direction direction) {
  const int n = f.ground_size();
  require_enumerable(n, "brute_force_optimize");
  const std::uint64_t end = std::uint64_t{1} << n;
  OptResult best{Subset::empty(), f(Subset::empty()), 1, {}};
  for (std::uint64_t m = 1; m < end; ++m) {
    const double v = f(Subset(m));
    ++best.evaluations;
    const bool better = direction == Direction::kMinimize ? v < best.value : v > best.value;
    if (better) {
      best.argset = Subset(m);
      best.value = v;
    }
  }
  return best;
}

}  // namespace submod
