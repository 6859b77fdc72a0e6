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

// Exhaustive property validators.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {

enum class Property { kSubmodularity, kMonotonicity, kNormalization, kMNaturalConcavity };

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::kSubmodularity: return "submodularity";
    case Property::kMonotonicity: return "monotonicity";
    case Property::kNormalization: return "normalization";
    case Property::kMNaturalConcavity: return "m_natural_concavity";
  }
  return "unknown";
}

inline Property parse_property(std::string_view name) {
  if (name == "submodularity" || name == "submodular") return Property::kSubmodularity;
  if (name == "monotonicity" || name == "monotone") return Property::kMonotonicity;
  if (name == "normalization" || name == "normalized") return Property::kNormalization;
  if (name == "m_natural_concavity" || name == "m_natural_concave") {
    return Property::kMNaturalConcavity;
  }
  throw Error(ErrorCode::kUsage, "unknown property '" + std::string(name) + "'");
}

// Exchange-property checks cost O(4^n n^2); they get a tighter cap.
inline constexpr int kMNaturalValidationCap = 10;

// A violated inequality `lhs >= rhs` (equality `lhs == rhs` for
// normalization).
//   submodularity:  lhs = f(j|S), rhs = f(j|T), T = S + k
//   monotonicity:   lhs = f(T),   rhs = f(S),   T = S + j
//   normalization:  lhs = f(∅),   rhs = 0
//   M-natural:      lhs = best exchange value, rhs = f(S) + f(T), element i in S \ T
struct Counterexample {
  Subset s;
  Subset t;
  std::optional<int> element;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ValidationReport {
  Property property;
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

namespace detail {

template <SetFunction F>
ValidationReport validate_submodularity(const F& f) {
  const int n = f.ground_size();
  ValidationReport report{Property::kSubmodularity, true, std::nullopt};
  // f(S+j) + f(S+k) >= f(S+j+k) + f(S) for all S ⊆ V \ {j, k}.
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const Subset rest = Subset::full(n).without(j).without(k);
      bool found = false;
      for_each_subset_of(rest, [&](Subset s) {
        if (found) return;
        const double fs = f(s);
        const double fsj = f(s.with(j));
        const double fsk = f(s.with(k));
        const double fsjk = f(s.with(j).with(k));
        const double gain_small = fsj - fs;
        const double gain_large = fsjk - fsk;
        if (gain_small < gain_large - kTolerance) {
          report.holds = false;
          report.counterexample = Counterexample{s, s.with(k), j, gain_small, gain_large};
          found = true;
        }
      });
      if (found) return report;
    }
  }
  return report;
}

template <SetFunction F>
ValidationReport validate_monotonicity(const F& f) {
  const int n = f.ground_size();
  ValidationReport report{Property::kMonotonicity, true, std::nullopt};
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    const Subset s(m);
    const double fs = f(s);
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      const double ft = f(s.with(j));
      if (ft < fs - kTolerance) {
        report.holds = false;
        report.counterexample = Counterexample{s, s.with(j), j, ft, fs};
        return report;
      }
    }
  }
  return report;
}

template <SetFunction F>
ValidationReport validate_m_natural(const F& f) {
  const int n = f.ground_size();
  ValidationReport report{Property::kMNaturalConcavity, true, std::nullopt};
  const std::uint64_t end = std::uint64_t{1} << n;
  // For all S, T and i in S \ T:
  //   f(S) + f(T) <= max(f(S-i) + f(T+i), max_{j in T\S} f(S-i+j) + f(T+i-j)).
  for (std::uint64_t a = 0; a < end; ++a) {
    const Subset s(a);
    const double fs = f(s);
    for (std::uint64_t b = 0; b < end; ++b) {
      const Subset t(b);
      const Subset only_s = s - t;
      if (only_s.is_empty()) continue;
      const double target = fs + f(t);
      const Subset only_t = t - s;
      bool fail = false;
      only_s.for_each([&](int i) {
        if (fail) return;
        double best = f(s.without(i)) + f(t.with(i));
        only_t.for_each([&](int j) {
          best = std::max(best, f(s.without(i).with(j)) + f(t.with(i).without(j)));
        });
        if (best < target - kTolerance) {
          report.holds = false;
          report.counterexample = Counterexample{s, t, i, best, target};
          fail = true;
        }
      });
      if (fail) return report;
    }
  }
  return report;
}

}  // namespace detail

// Decides a property by enumeration. Submodularity uses the two-element gain
// form, which is equivalent to the pairwise definition at O(n^2 2^n) cost.
template <SetFunction F>
ValidationReport validate(const F& f, Property property) {
  const int n = f.ground_size();
  switch (property) {
    case Property::kSubmodularity:
      require_enumerable(n, "validate(submodularity)");
      return detail::validate_submodularity(f);
    case Property::kMonotonicity:
      require_enumerable(n, "validate(monotonicity)");
      return detail::validate_monotonicity(f);
    case Property::kNormalization: {
      ValidationReport report{Property::kNormalization, true, std::nullopt};
      const double v = f(Subset::empty());
      if (std::abs(v) > kTolerance) {
        report.holds = false;
        report.counterexample = Counterexample{Subset::empty(), Subset::empty(), std::nullopt, v, 0.0};
      }
      return report;
    }
    case Property::kMNaturalConcavity:
      if (n > std::min(kMNaturalValidationCap, exhaustive_cap())) {
        throw Error(ErrorCode::kCapExceeded,
                    "validate(m_natural_concavity) is limited to n <= " +
                        std::to_string(std::min(kMNaturalValidationCap, exhaustive_cap())));
      }
      return detail::validate_m_natural(f);
  }
  throw Error(ErrorCode::kUsage, "unknown property");
}

// Validates every flag the function declares as true. Returns the first
// failing report, if any. M-natural concavity is only checked when the
// ground set is small enough for the exchange sweep.
template <SetFunction F>
std::optional<ValidationReport> validate_declared_flags(const F& f) {
  const Flags flags = f.flags();
  const int n = f.ground_size();
  if (flags.normalized) {
    auto r = validate(f, Property::kNormalization);
    if (!r.holds) return r;
  }
  if (n > exhaustive_cap()) return std::nullopt;
  if (flags.submodular) {
    auto r = validate(f, Property::kSubmodularity);
    if (!r.holds) return r;
  }
  if (flags.monotone) {
    auto r = validate(f, Property::kMonotonicity);
    if (!r.holds) return r;
  }
  if (flags.m_natural_concave && n <= kMNaturalValidationCap) {
    auto r = validate(f, Property::kMNaturalConcavity);
    if (!r.holds) return r;
  }
  return std::nullopt;
}

}  // namespace submod
