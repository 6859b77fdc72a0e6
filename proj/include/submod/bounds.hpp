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

// Closed-form supergradients and the tight bounds built from them.

#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "submod/error.hpp"
#include "submod/polyhedra.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {

// grow, shrink and bar are supergradients of a submodular f at X. tilde is
// the shared corner of the Hamming-one relaxations of both semidifferentials
// and in general lies in neither.
enum class SupergradientKind { kGrow, kShrink, kBar, kTilde };

inline std::string_view to_string(SupergradientKind k) {
  switch (k) {
    case SupergradientKind::kGrow: return "grow";
    case SupergradientKind::kShrink: return "shrink";
    case SupergradientKind::kBar: return "bar";
    case SupergradientKind::kTilde: return "tilde";
  }
  return "grow";
}

inline SupergradientKind parse_supergradient_kind(std::string_view name) {
  if (name == "grow") return SupergradientKind::kGrow;
  if (name == "shrink") return SupergradientKind::kShrink;
  if (name == "bar") return SupergradientKind::kBar;
  if (name == "tilde") return SupergradientKind::kTilde;
  throw Error(ErrorCode::kUsage, "unknown supergradient kind '" + std::string(name) + "'");
}

//            j ∈ X             j ∉ X
//   grow     f(j | X - j)      f(j | ∅)
//   shrink   f(j | V - j)      f(j | X)
//   bar      f(j | V - j)      f(j | ∅)
//   tilde    f(j | X - j)      f(j | X)
template <SetFunction F>
Point supergradient(const F& f, Subset x, SupergradientKind kind) {
  const int n = f.ground_size();
  check_subset(x, n, "anchor");
  const Subset v = Subset::full(n);
  const double f_empty = f(Subset::empty());
  const double f_x = f(x);
  const double f_v = f(v);
  Point g = Point::zeros(n);
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      const bool local = kind == SupergradientKind::kGrow || kind == SupergradientKind::kTilde;
      g[j] = local ? f_x - f(x.without(j)) : f_v - f(v.without(j));
    } else {
      const bool local = kind == SupergradientKind::kShrink || kind == SupergradientKind::kTilde;
      g[j] = local ? f(x.with(j)) - f_x : f(Subset::singleton(j)) - f_empty;
    }
  }
  return g;
}

enum class BoundDirection { kUpper, kLower };

// m(Y) = anchor_value + base(Y) - base(X). Tight at X; an upper bound
// dominates f everywhere, a lower bound is dominated by it.
struct ModularBound {
  Point base;
  Subset anchor;
  double anchor_value = 0.0;
  BoundDirection direction = BoundDirection::kUpper;

  double operator()(Subset y) const { return anchor_value + base(y) - base(anchor); }
};

template <SetFunction F>
ModularBound modular_upper_bound(const F& f, Subset x, SupergradientKind kind) {
  if (kind == SupergradientKind::kTilde) {
    throw Error(ErrorCode::kPrecondition, "tilde is not a supergradient; no upper bound");
  }
  return ModularBound{supergradient(f, x, kind), x, f(x), BoundDirection::kUpper};
}

// Built from the extreme subgradient h^σ_X. For normalized f this is the
// normalized modular function h^σ_X itself.
template <SetFunction F>
ModularBound modular_lower_bound(const F& f, Subset x, const Permutation& order) {
  return ModularBound{subdiff_vertex(f, x, order), x, f(x), BoundDirection::kLower};
}

enum class NemhauserKind { kOne, kTwo };

inline std::string_view to_string(NemhauserKind k) {
  return k == NemhauserKind::kOne ? "one" : "two";
}

// Non-modular upper bounds of a submodular f anchored at X:
//   one: f(X) - Σ_{j∈X\Y} f(j | X - j)       + Σ_{j∈Y\X} f(j | X ∩ Y)
//   two: f(X) - Σ_{j∈X\Y} f(j | X ∪ Y - j)   + Σ_{j∈Y\X} f(j | X)
// Usable wherever a SetFunction is expected.
template <SetFunction F>
class NemhauserBound {
 public:
  NemhauserBound(F f, Subset anchor, NemhauserKind which)
      : f_(std::move(f)), anchor_(anchor), which_(which), anchor_value_(f_(anchor)) {
    check_subset(anchor, f_.ground_size(), "anchor");
  }

  int ground_size() const { return f_.ground_size(); }
  Flags flags() const { return {}; }
  Subset anchor() const { return anchor_; }
  NemhauserKind which() const { return which_; }

  double operator()(Subset y) const {
    const Subset removed = anchor_ - y;
    const Subset added = y - anchor_;
    double value = anchor_value_;
    if (which_ == NemhauserKind::kOne) {
      removed.for_each([&](int j) { value -= anchor_value_ - f_(anchor_.without(j)); });
      const Subset base = anchor_ & y;
      const double f_base = f_(base);
      added.for_each([&](int j) { value += f_(base.with(j)) - f_base; });
    } else {
      const Subset joined = anchor_ | y;
      const double f_joined = f_(joined);
      removed.for_each([&](int j) { value -= f_joined - f_(joined.without(j)); });
      added.for_each([&](int j) { value += f_(anchor_.with(j)) - anchor_value_; });
    }
    return value;
  }

 private:
  F f_;
  Subset anchor_;
  NemhauserKind which_;
  double anchor_value_;
};

template <SetFunction F>
NemhauserBound<F> nemhauser_bound(const F& f, Subset x, NemhauserKind which) {
  return NemhauserBound<F>(f, x, which);
}

}  // namespace submod
