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

// Seeded randomized experiment sweeps. Each trial draws its own generator
// from (seed, trial index), so a fixed seed reproduces every trial and the
// aggregate exactly.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/bounds.hpp"
#include "submod/brute_force.hpp"
#include "submod/error.hpp"
#include "submod/optimize.hpp"
#include "submod/polyhedra.hpp"
#include "submod/random.hpp"
#include "submod/zoo.hpp"

namespace submod {

enum class SweepSuite { kThirdMax, kHierarchy, kMNatural, kFujishige, kSupergradients, kPositiveMax };

inline std::string_view to_string(SweepSuite s) {
  switch (s) {
    case SweepSuite::kThirdMax: return "third-max";
    case SweepSuite::kHierarchy: return "hierarchy";
    case SweepSuite::kMNatural: return "m-natural";
    case SweepSuite::kFujishige: return "fujishige";
    case SweepSuite::kSupergradients: return "supergradients";
    case SweepSuite::kPositiveMax: return "positive-max";
  }
  return "third-max";
}

inline SweepSuite parse_sweep_suite(std::string_view name) {
  for (auto s : {SweepSuite::kThirdMax, SweepSuite::kHierarchy, SweepSuite::kMNatural,
                 SweepSuite::kFujishige, SweepSuite::kSupergradients, SweepSuite::kPositiveMax}) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorCode::kUsage, "unknown sweep suite '" + std::string(name) + "'");
}

struct SweepConfig {
  SweepSuite suite = SweepSuite::kThirdMax;
  // "any", "nonneg", "m_natural", a RandomFamily name, or empty for the
  // suite's default.
  std::string family;
  int n_min = 2;
  int n_max = 6;
  std::uint64_t seed = 1;
  int reps = 10;
  int points = 20;  // random points per trial, for point-based suites
};

struct SweepOutput {
  std::vector<nlohmann::json> trials;
  nlohmann::json summary;
};

namespace detail {

inline std::string default_family(SweepSuite suite) {
  switch (suite) {
    case SweepSuite::kThirdMax: return "nonneg";
    case SweepSuite::kHierarchy: return "graph_cut";
    case SweepSuite::kMNatural: return "m_natural";
    default: return "any";
  }
}

inline ZooFunction draw_function(const std::string& family, int n, Rng& rng) {
  if (family == "any") return random_function_from(kAllRandomFamilies, n, rng);
  if (family == "nonneg") return random_function_from(kNonnegativeFamilies, n, rng);
  if (family == "m_natural") return random_function_from(kMNaturalFamilies, n, rng);
  return random_function(parse_random_family(family), n, rng);
}

inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// A random convex combination of the closed-form supergradients, optionally
// blurred, so a good share of draws lands on each side of every outer bound.
template <SetFunction F>
Point draw_point_near_supergradients(const F& f, Subset x, Rng& rng) {
  static constexpr SupergradientKind kinds[] = {SupergradientKind::kGrow, SupergradientKind::kShrink,
                                                SupergradientKind::kBar, SupergradientKind::kTilde};
  const int n = f.ground_size();
  Point center = Point::zeros(n);
  double weights[4];
  double total = 0.0;
  for (double& w : weights) total += (w = uniform01(rng) + 1e-3);
  // The tilde point is usually outside the exact superdifferential; include
  // it only in half of the draws.
  if (coin(rng, 0.5)) total -= weights[3], weights[3] = 0.0;
  double scale = 0.1;
  for (int i = 0; i < 4; ++i) {
    const Point g = supergradient(f, x, kinds[i]);
    for (int j = 0; j < n; ++j) {
      center[j] += weights[i] / total * g[j];
      scale = std::max(scale, std::abs(g[j]));
    }
  }
  if (coin(rng, 0.5)) return center;
  return perturb(center, uniform_real(rng, 0.0, 0.5) * scale, rng);
}

}  // namespace detail

inline SweepOutput run_sweep(const SweepConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min || config.n_max > kMaxGroundSize) {
    throw Error(ErrorCode::kUsage, "sweep sizes must satisfy 1 <= n_min <= n_max");
  }
  if (config.reps < 0 || config.points < 0) {
    throw Error(ErrorCode::kUsage, "sweep reps and points must be >= 0");
  }
  require_enumerable(config.n_max, "sweep");
  const std::string family =
      config.family.empty() ? detail::default_family(config.suite) : config.family;
  if (family != "any" && family != "nonneg" && family != "m_natural") {
    parse_random_family(family);
  }

  using nlohmann::json;
  SweepOutput out;
  std::int64_t violations = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double ratio_sum = 0.0;
  std::int64_t checks = 0;
  bool all_monotone = true;

  for (int trial = 0; trial < config.reps; ++trial) {
    Rng rng(detail::trial_seed(config.seed, trial));
    const int n = uniform_int(rng, config.n_min, config.n_max);
    const ZooFunction f = detail::draw_function(family, n, rng);
    json t;
    t["trial"] = trial;
    t["n"] = n;
    t["family"] = std::string(zoo::family_name(f.family()));
    std::int64_t trial_violations = 0;

    switch (config.suite) {
      case SweepSuite::kThirdMax: {
        const Subset start = random_subset(n, rng);
        const OptResult got = one_third_max(f, start);
        const double opt = brute_force_optimize(f, Direction::kMaximize).value;
        const double ratio = opt > kTolerance ? got.value / opt : 1.0;
        if (got.value < opt / 3.0 - kTolerance) ++trial_violations;
        min_ratio = std::min(min_ratio, ratio);
        ratio_sum += ratio;
        ++checks;
        t["start"] = start.elements();
        t["argset"] = got.argset.elements();
        t["value"] = got.value;
        t["opt"] = opt;
        t["ratio"] = ratio;
        break;
      }
      case SweepSuite::kHierarchy: {
        const Subset x = random_subset(n, rng);
        std::vector<std::vector<std::int64_t>> counts(n, std::vector<std::int64_t>(n, 0));
        std::int64_t exact_count = 0;
        for (int p = 0; p < config.points; ++p) {
          const Point pt = detail::draw_point_near_supergradients(f, x, rng);
          const bool exact = membership(f, PolyhedronDescriptor::superdifferential(x), pt).member;
          exact_count += exact;
          std::vector<std::vector<bool>> in(n, std::vector<bool>(n));
          for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
              in[k - 1][l - 1] =
                  membership(f, PolyhedronDescriptor::super_outer(x, k, l), pt).member;
              counts[k - 1][l - 1] += in[k - 1][l - 1];
            }
          }
          for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
              if (exact && !in[k - 1][l - 1]) ++trial_violations;
              if (k > 1 && in[k - 1][l - 1] && !in[k - 2][l - 1]) ++trial_violations;
              if (l > 1 && in[k - 1][l - 1] && !in[k - 1][l - 2]) ++trial_violations;
            }
          }
          if (in[n - 1][n - 1] != exact) ++trial_violations;
          ++checks;
        }
        bool monotone = true;
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            if (k > 0 && counts[k][l] > counts[k - 1][l]) monotone = false;
            if (l > 0 && counts[k][l] > counts[k][l - 1]) monotone = false;
          }
        }
        all_monotone = all_monotone && monotone;
        t["anchor"] = x.elements();
        t["points"] = config.points;
        t["exact_members"] = exact_count;
        t["outer_members"] = counts;
        t["rate_monotone"] = monotone;
        break;
      }
      case SweepSuite::kMNatural: {
        const Subset x = random_subset(n, rng);
        const int k = std::min(2, n);
        std::int64_t agree_members = 0;
        for (int p = 0; p < config.points; ++p) {
          const Point pt = detail::draw_point_near_supergradients(f, x, rng);
          const bool exact = membership(f, PolyhedronDescriptor::superdifferential(x), pt).member;
          const bool outer = membership(f, PolyhedronDescriptor::super_outer(x, k, k), pt).member;
          if (exact != outer) ++trial_violations;
          agree_members += exact && outer;
          ++checks;
        }
        t["anchor"] = x.elements();
        t["points"] = config.points;
        t["members"] = agree_members;
        break;
      }
      case SweepSuite::kFujishige: {
        const double best = brute_force_optimize(f, Direction::kMinimize).value;
        std::int64_t minimizers = 0;
        for_each_subset_of(Subset::full(n), [&](Subset a) {
          const bool is_min = f(a) <= best + kTolerance;
          const bool cert = certificate(f, a, CertificateKind::kGlobalMin).holds;
          if (is_min != cert) ++trial_violations;
          minimizers += is_min;
          ++checks;
        });
        t["min_value"] = best;
        t["minimizers"] = minimizers;
        break;
      }
      case SweepSuite::kSupergradients: {
        for_each_subset_of(Subset::full(n), [&](Subset x) {
          for (auto kind : {SupergradientKind::kGrow, SupergradientKind::kShrink,
                            SupergradientKind::kBar}) {
            const Point g = supergradient(f, x, kind);
            if (!membership(f, PolyhedronDescriptor::superdifferential(x), g).member) {
              ++trial_violations;
            }
            ++checks;
          }
        });
        break;
      }
      case SweepSuite::kPositiveMax: {
        const bool fast = positive_max_exists(f);
        const double best = brute_force_optimize(f, Direction::kMaximize).value;
        if (fast != (best > kTolerance)) ++trial_violations;
        ++checks;
        t["positive"] = fast;
        t["max_value"] = best;
        break;
      }
    }
    t["violations"] = trial_violations;
    violations += trial_violations;
    out.trials.push_back(std::move(t));
  }

  json summary;
  summary["suite"] = std::string(to_string(config.suite));
  summary["family"] = family;
  summary["n_min"] = config.n_min;
  summary["n_max"] = config.n_max;
  summary["seed"] = config.seed;
  summary["count"] = config.reps;
  summary["checks"] = checks;
  summary["violations"] = violations;
  if (config.suite == SweepSuite::kThirdMax) {
    summary["min_ratio"] = config.reps > 0 ? json(min_ratio) : json(nullptr);
    summary["mean_ratio"] = config.reps > 0 ? json(ratio_sum / config.reps) : json(nullptr);
  }
  if (config.suite == SweepSuite::kHierarchy) summary["rate_monotone"] = all_monotone;
  out.summary = std::move(summary);
  return out;
}

}  // namespace submod
