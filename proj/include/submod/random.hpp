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

// Seeded random instances, subsets and points for sweeps and property tests.
// The draws use mt19937_64 with hand-rolled mappings so a seed yields the
// same instance on every standard library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"
#include "submod/zoo.hpp"

namespace submod {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [lo, hi].
inline int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

inline bool coin(Rng& rng, double p) { return uniform01(rng) < p; }

enum class RandomFamily {
  kModular,
  kModularNonnegative,
  kCoverage,
  kGraphCut,
  kConcaveSqrt,
  kConcaveLog1p,
  kCappedLinear,
  kCappedCardinality,
  kUniformMatroid,
  kPartitionMatroid,
};

inline constexpr RandomFamily kAllRandomFamilies[] = {
    RandomFamily::kModular,         RandomFamily::kModularNonnegative,
    RandomFamily::kCoverage,        RandomFamily::kGraphCut,
    RandomFamily::kConcaveSqrt,     RandomFamily::kConcaveLog1p,
    RandomFamily::kCappedLinear,    RandomFamily::kCappedCardinality,
    RandomFamily::kUniformMatroid,  RandomFamily::kPartitionMatroid,
};

// Families that are nonnegative and normalized.
inline constexpr RandomFamily kNonnegativeFamilies[] = {
    RandomFamily::kModularNonnegative, RandomFamily::kCoverage,
    RandomFamily::kGraphCut,           RandomFamily::kConcaveSqrt,
    RandomFamily::kConcaveLog1p,       RandomFamily::kCappedLinear,
    RandomFamily::kCappedCardinality,  RandomFamily::kUniformMatroid,
    RandomFamily::kPartitionMatroid,
};

// Matroid ranks and concave-of-cardinality functions.
inline constexpr RandomFamily kMNaturalFamilies[] = {
    RandomFamily::kCappedCardinality,
    RandomFamily::kUniformMatroid,
    RandomFamily::kPartitionMatroid,
};

inline std::string_view to_string(RandomFamily f) {
  switch (f) {
    case RandomFamily::kModular: return "modular";
    case RandomFamily::kModularNonnegative: return "modular_nonneg";
    case RandomFamily::kCoverage: return "coverage";
    case RandomFamily::kGraphCut: return "graph_cut";
    case RandomFamily::kConcaveSqrt: return "concave_sqrt";
    case RandomFamily::kConcaveLog1p: return "concave_log1p";
    case RandomFamily::kCappedLinear: return "capped_linear";
    case RandomFamily::kCappedCardinality: return "capped_cardinality";
    case RandomFamily::kUniformMatroid: return "uniform_matroid";
    case RandomFamily::kPartitionMatroid: return "partition_matroid";
  }
  return "modular";
}

inline RandomFamily parse_random_family(std::string_view name) {
  for (RandomFamily f : kAllRandomFamilies) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::kUsage, "unknown instance family '" + std::string(name) + "'");
}

inline ZooFunction random_function(RandomFamily family, int n, Rng& rng) {
  switch (family) {
    case RandomFamily::kModular:
    case RandomFamily::kModularNonnegative: {
      const double lo = family == RandomFamily::kModular ? -2.0 : 0.0;
      std::vector<double> w(n);
      for (double& v : w) v = uniform_real(rng, lo, 2.0);
      return ZooFunction::modular(std::move(w));
    }
    case RandomFamily::kCoverage: {
      const int items = n + uniform_int(rng, 0, n);
      std::vector<std::vector<int>> covers(n);
      for (auto& list : covers) {
        for (int item = 0; item < items; ++item) {
          if (coin(rng, 0.3)) list.push_back(item);
        }
      }
      std::vector<double> weights;
      if (coin(rng, 0.5)) {
        weights.resize(items);
        for (double& v : weights) v = uniform_real(rng, 0.5, 2.0);
      }
      return ZooFunction::coverage(std::move(covers), std::move(weights));
    }
    case RandomFamily::kGraphCut: {
      std::vector<zoo::Edge> edges;
      const bool integral = coin(rng, 0.5);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng, 0.5)) {
            const double w = integral ? uniform_int(rng, 1, 3) : uniform_real(rng, 0.5, 2.0);
            edges.push_back({u, v, w});
          }
        }
      }
      return ZooFunction::graph_cut(n, std::move(edges));
    }
    case RandomFamily::kConcaveSqrt:
    case RandomFamily::kConcaveLog1p:
    case RandomFamily::kCappedLinear: {
      std::vector<double> w(n);
      double total = 0.0;
      for (double& v : w) {
        v = uniform_real(rng, 0.0, 2.0);
        total += v;
      }
      if (family == RandomFamily::kCappedLinear) {
        return ZooFunction::concave_over_modular(zoo::ConcaveShape::kCappedLinear, std::move(w),
                                                 uniform_real(rng, 0.3, 0.7) * total);
      }
      const auto shape = family == RandomFamily::kConcaveSqrt ? zoo::ConcaveShape::kSqrt
                                                              : zoo::ConcaveShape::kLog1p;
      return ZooFunction::concave_over_modular(shape, std::move(w));
    }
    case RandomFamily::kCappedCardinality: {
      const double budget = uniform_int(rng, 0, 2 * n) / 2.0;
      return ZooFunction::concave_over_modular(zoo::ConcaveShape::kCappedLinear,
                                               std::vector<double>(n, 1.0), budget);
    }
    case RandomFamily::kUniformMatroid:
      return ZooFunction::uniform_matroid(n, uniform_int(rng, 0, n));
    case RandomFamily::kPartitionMatroid: {
      const int block_count = uniform_int(rng, 1, std::min(n, 3));
      std::vector<std::vector<int>> blocks(block_count);
      // Seed every block with one element so none is empty.
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
      for (int i = 0; i < n; ++i) {
        const int b = i < block_count ? i : uniform_int(rng, 0, block_count - 1);
        blocks[b].push_back(order[i]);
      }
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      std::vector<int> caps(block_count);
      for (int b = 0; b < block_count; ++b) {
        caps[b] = uniform_int(rng, 0, static_cast<int>(blocks[b].size()));
      }
      return ZooFunction::partition_matroid(n, std::move(blocks), std::move(caps));
    }
  }
  throw Error(ErrorCode::kUsage, "unknown instance family");
}

template <std::size_t N>
ZooFunction random_function_from(const RandomFamily (&families)[N], int n, Rng& rng) {
  const RandomFamily f = families[uniform_int(rng, 0, static_cast<int>(N) - 1)];
  return random_function(f, n, rng);
}

inline Subset random_subset(int n, Rng& rng) {
  return Subset(rng() & Subset::full(n).mask());
}

inline Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  return Permutation(std::move(order));
}

// A uniformly shuffled permutation that lists the elements of x first.
inline Permutation random_prefix_permutation(Subset x, int n, Rng& rng) {
  std::vector<int> inside = x.elements();
  std::vector<int> outside = x.complement(n).elements();
  for (int i = static_cast<int>(inside.size()) - 1; i > 0; --i) {
    std::swap(inside[i], inside[uniform_int(rng, 0, i)]);
  }
  for (int i = static_cast<int>(outside.size()) - 1; i > 0; --i) {
    std::swap(outside[i], outside[uniform_int(rng, 0, i)]);
  }
  inside.insert(inside.end(), outside.begin(), outside.end());
  return Permutation(std::move(inside));
}

// center + uniform noise in [-radius, radius] per coordinate.
inline Point perturb(const Point& center, double radius, Rng& rng) {
  Point out = center;
  for (int j = 0; j < out.size(); ++j) out[j] += uniform_real(rng, -radius, radius);
  return out;
}

}  // namespace submod
