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

// Membership oracles and extreme-point constructions for the polyhedra
// attached to a set function f over V = {0, ..., n-1}:
//
//   lower polyhedron      P_f     = { x : x(S) <= f(S) for all S }
//   base polytope         B_f     = P_f ∩ { x : x(V) = f(V) }
//   upper polyhedron      P^f     = { x : x(S) >= f(S) for all S }
//   subdifferential       ∂_f(X)  = { x : f(Y) - x(Y) >= f(X) - x(X) for all Y }
//   superdifferential     ∂^f(X)  = { x : f(Y) - x(Y) <= f(X) - x(X) for all Y }
//
// plus the relaxations and inner approximations of the superdifferential.
// When f declares itself submodular, the oracles use the reduced inequality
// families that submodularity makes sufficient; otherwise they enumerate the
// full definition.
//
// Every inequality is accepted with absolute slack kTolerance, so boundary
// points are members. A negative verdict carries the first violated
// inequality in a deterministic order.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "submod/brute_force.hpp"
#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {

enum class PolyhedronKind {
  kLowerPolyhedron,
  kBasePolytope,
  kUpperPolyhedron,
  kSubdifferential,
  kSuperdifferential,
  kSubOuter11,
  kSuperOuter,
  kInnerBox,
  kInnerConv,
};

enum class InnerKind { kGrow, kShrink, kBar };

inline std::string_view to_string(InnerKind k) {
  switch (k) {
    case InnerKind::kGrow: return "grow";
    case InnerKind::kShrink: return "shrink";
    case InnerKind::kBar: return "bar";
  }
  return "grow";
}

struct PolyhedronDescriptor {
  PolyhedronKind kind = PolyhedronKind::kLowerPolyhedron;
  Subset anchor;  // X, where the kind has one
  int k = 1;      // SuperOuter only
  int l = 1;
  InnerKind inner = InnerKind::kGrow;  // InnerBox only

  static PolyhedronDescriptor lower() { return {PolyhedronKind::kLowerPolyhedron, Subset{}}; }
  static PolyhedronDescriptor base() { return {PolyhedronKind::kBasePolytope, Subset{}}; }
  static PolyhedronDescriptor upper() { return {PolyhedronKind::kUpperPolyhedron, Subset{}}; }
  static PolyhedronDescriptor subdifferential(Subset x) {
    return {PolyhedronKind::kSubdifferential, x};
  }
  static PolyhedronDescriptor superdifferential(Subset x) {
    return {PolyhedronKind::kSuperdifferential, x};
  }
  static PolyhedronDescriptor sub_outer11(Subset x) { return {PolyhedronKind::kSubOuter11, x}; }
  static PolyhedronDescriptor super_outer(Subset x, int k, int l) {
    return {PolyhedronKind::kSuperOuter, x, k, l};
  }
  static PolyhedronDescriptor inner_box(Subset x, InnerKind which) {
    return {PolyhedronKind::kInnerBox, x, 1, 1, which};
  }
  static PolyhedronDescriptor inner_conv(Subset x) { return {PolyhedronKind::kInnerConv, x}; }

  bool has_anchor() const {
    return kind != PolyhedronKind::kLowerPolyhedron && kind != PolyhedronKind::kBasePolytope &&
           kind != PolyhedronKind::kUpperPolyhedron;
  }
};

enum class Method { kClosedForm, kEnumeration, kRestrictedEnumeration, kLambdaInterval };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::kClosedForm: return "closed_form";
    case Method::kEnumeration: return "enumeration";
    case Method::kRestrictedEnumeration: return "restricted_enumeration";
    case Method::kLambdaInterval: return "lambda_interval";
  }
  return "closed_form";
}

// A violated inequality `lhs <= rhs` that belongs to set `set`.
//
// For the set-indexed polyhedra the two sides are those of the defining
// inequality at Y = set (e.g. for ∂^f(X): lhs = f(Y) - x(Y), rhs = f(X) - x(X)).
// For InnerBox the inequality is the coordinate bound of `element`. For
// InnerConv, `set` holds the coordinates whose λ-intervals conflict and the
// sides are the lower and upper ends of the empty λ-range.
struct Violation {
  Subset set;
  std::optional<int> element;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct MembershipVerdict {
  bool member = true;
  std::optional<Violation> witness;
  Method method = Method::kClosedForm;
};

inline bool within(double lhs, double rhs) { return lhs <= rhs + kTolerance; }

// Extreme point of P_f (and B_f) generated by the chain of `order`:
// h(σ_i) = f(S_i) - f(S_{i-1}).
template <SetFunction F>
Point greedy_vertex(const F& f, const Permutation& order) {
  const int n = f.ground_size();
  if (order.size() != n) {
    throw Error(ErrorCode::kDescriptorMismatch, "permutation length differs from ground set");
  }
  const double empty_value = f(Subset::empty());
  if (std::abs(empty_value) > kTolerance) {
    throw Error(ErrorCode::kPrecondition,
                "greedy_vertex requires a normalized function; f(empty) = " +
                    std::to_string(empty_value));
  }
  Point h = Point::zeros(n);
  Subset chain;
  double previous = empty_value;
  for (int i = 0; i < n; ++i) {
    chain = chain.with(order[i]);
    const double current = f(chain);
    h[order[i]] = current - previous;
    previous = current;
  }
  return h;
}

inline void require_prefix(const Permutation& order, Subset x) {
  if (auto p = order.first_prefix_violation(x)) {
    const int element = order[*p];
    throw Error(ErrorCode::kPermutationInconsistent,
                "permutation must list " + x.to_string() + " in its first " +
                    std::to_string(x.size()) + " positions; element " +
                    std::to_string(element) + " at position " + std::to_string(*p) +
                    " breaks this");
  }
}

// Extreme point h^σ_X of ∂_f(X); `order` must list X first.
template <SetFunction F>
Point subdiff_vertex(const F& f, Subset x, const Permutation& order) {
  check_subset(x, f.ground_size(), "anchor");
  if (order.size() != f.ground_size()) {
    throw Error(ErrorCode::kDescriptorMismatch, "permutation length differs from ground set");
  }
  require_prefix(order, x);
  return greedy_vertex(f, order);
}

// Coordinate bounds of one of the inner boxes of ∂^f(X): an upper bound on
// x(j) for j in X and a lower bound for j outside X.
//
//   grow   : j ∈ X: f(j | X - j)   j ∉ X: f(j | ∅)
//   shrink : j ∈ X: f(j | V - j)   j ∉ X: f(j | X)
//   bar    : j ∈ X: f(j | V - j)   j ∉ X: f(j | ∅)
struct InnerBox {
  Subset anchor;
  InnerKind kind = InnerKind::kGrow;
  std::vector<double> bounds;

  Point corner() const { return Point(bounds); }

  bool contains(const Point& x) const {
    for (int j = 0; j < static_cast<int>(bounds.size()); ++j) {
      if (anchor.contains(j) ? !within(x[j], bounds[j]) : !within(bounds[j], x[j])) return false;
    }
    return true;
  }
};

namespace detail {

// x(j) <= f(j | X - j), j ∈ X: the irredundant part of the Y ⊆ X family.
template <SetFunction F>
double below_anchor_bound(const F& f, Subset x, int j) {
  return f(x) - f(x.without(j));
}
// x(j) >= f(j | X), j ∉ X: the irredundant part of the Y ⊇ X family.
template <SetFunction F>
double above_anchor_bound(const F& f, Subset x, int j) {
  return f(x.with(j)) - f(x);
}
// x(j) <= f(j | V - j), j ∈ X.
template <SetFunction F>
double ground_bound(const F& f, int j) {
  const Subset v = Subset::full(f.ground_size());
  return f(v) - f(v.without(j));
}
// x(j) >= f(j | ∅), j ∉ X.
template <SetFunction F>
double empty_bound(const F& f, int j) {
  return f(Subset::singleton(j)) - f(Subset::empty());
}

struct Scan {
  std::optional<Violation> first;
  void offer(const Violation& v) {
    if (!first || v.set.mask() < first->set.mask()) first = v;
  }
};

}  // namespace detail

template <SetFunction F>
InnerBox inner_box(const F& f, Subset x, InnerKind kind) {
  const int n = f.ground_size();
  check_subset(x, n, "anchor");
  InnerBox box{x, kind, std::vector<double>(n)};
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      box.bounds[j] = kind == InnerKind::kGrow ? detail::below_anchor_bound(f, x, j)
                                               : detail::ground_bound(f, j);
    } else {
      box.bounds[j] = kind == InnerKind::kShrink ? detail::above_anchor_bound(f, x, j)
                                                 : detail::empty_bound(f, j);
    }
  }
  return box;
}

// The Y ⊆ X part of ∂^f(X). With a submodular f only Y = X - j matter.
template <SetFunction F>
MembershipVerdict check_superdiff_subsets(const F& f, Subset anchor, const Point& x) {
  const double rhs = f(anchor) - x(anchor);
  if (f.flags().submodular) {
    for (int j : anchor.elements()) {
      const Subset y = anchor.without(j);
      const double lhs = f(y) - x(y);
      if (!within(lhs, rhs)) {
        return {false, Violation{y, j, lhs, rhs}, Method::kClosedForm};
      }
    }
    return {true, std::nullopt, Method::kClosedForm};
  }
  require_enumerable(anchor.size(), "superdifferential subset family");
  std::optional<Violation> first;
  for_each_subset_of(anchor, [&](Subset y) {
    if (first) return;
    const double lhs = f(y) - x(y);
    if (!within(lhs, rhs)) first = Violation{y, std::nullopt, lhs, rhs};
  });
  return {!first, first, Method::kRestrictedEnumeration};
}

// The Y ⊇ X part of ∂^f(X). With a submodular f only Y = X + j matter.
template <SetFunction F>
MembershipVerdict check_superdiff_supersets(const F& f, Subset anchor, const Point& x) {
  const int n = f.ground_size();
  const double rhs = f(anchor) - x(anchor);
  if (f.flags().submodular) {
    for (int j : anchor.complement(n).elements()) {
      const Subset y = anchor.with(j);
      const double lhs = f(y) - x(y);
      if (!within(lhs, rhs)) {
        return {false, Violation{y, j, lhs, rhs}, Method::kClosedForm};
      }
    }
    return {true, std::nullopt, Method::kClosedForm};
  }
  require_enumerable(n - anchor.size(), "superdifferential superset family");
  std::optional<Violation> first;
  for_each_superset_of(anchor, n, [&](Subset y) {
    if (first) return;
    const double lhs = f(y) - x(y);
    if (!within(lhs, rhs)) first = Violation{y, std::nullopt, lhs, rhs};
  });
  return {!first, first, Method::kRestrictedEnumeration};
}

namespace detail {

template <SetFunction F>
MembershipVerdict lower_polyhedron(const F& f, const Point& x) {
  // x ∈ P_f  iff  min_Y f(Y) - x(Y) >= 0.
  const ShiftedFunction<F> shifted(f, x);
  const OptResult best = brute_force_optimize(shifted, Direction::kMinimize);
  if (best.value < -kTolerance) {
    const Subset y = best.argset;
    return {false, Violation{y, std::nullopt, x(y), f(y)}, Method::kEnumeration};
  }
  return {true, std::nullopt, Method::kEnumeration};
}

template <SetFunction F>
MembershipVerdict upper_polyhedron(const F& f, const Point& x) {
  const int n = f.ground_size();
  const Flags flags = f.flags();
  if (flags.submodular && flags.normalized) {
    for (int j = 0; j < n; ++j) {
      const Subset y = Subset::singleton(j);
      if (!within(f(y), x[j])) return {false, Violation{y, j, f(y), x[j]}, Method::kClosedForm};
    }
    return {true, std::nullopt, Method::kClosedForm};
  }
  require_enumerable(n, "upper polyhedron membership");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    const Subset y(m);
    const double fy = f(y);
    const double xy = x(y);
    if (!within(fy, xy)) return {false, Violation{y, std::nullopt, fy, xy}, Method::kEnumeration};
  }
  return {true, std::nullopt, Method::kEnumeration};
}

template <SetFunction F>
MembershipVerdict subdifferential(const F& f, Subset anchor, const Point& x) {
  const int n = f.ground_size();
  const double lhs = f(anchor) - x(anchor);
  Scan scan;
  auto test = [&](Subset y) {
    const double rhs = f(y) - x(y);
    if (!within(lhs, rhs)) scan.offer(Violation{y, std::nullopt, lhs, rhs});
  };
  if (f.flags().submodular) {
    require_enumerable(std::max(anchor.size(), n - anchor.size()), "subdifferential membership");
    for_each_subset_of(anchor, test);
    for_each_superset_of(anchor, n, test);
    return {!scan.first, scan.first, Method::kRestrictedEnumeration};
  }
  require_enumerable(n, "subdifferential membership");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end && !scan.first; ++m) test(Subset(m));
  return {!scan.first, scan.first, Method::kEnumeration};
}

template <SetFunction F>
MembershipVerdict superdifferential(const F& f, Subset anchor, const Point& x) {
  const int n = f.ground_size();
  require_enumerable(n, "superdifferential membership");
  const double rhs = f(anchor) - x(anchor);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    const Subset y(m);
    const double lhs = f(y) - x(y);
    if (!within(lhs, rhs)) return {false, Violation{y, std::nullopt, lhs, rhs}, Method::kEnumeration};
  }
  return {true, std::nullopt, Method::kEnumeration};
}

// Hamming-one relaxation of ∂_f(X): n inequalities, one per neighbour X △ {j}.
template <SetFunction F>
MembershipVerdict sub_outer11(const F& f, Subset anchor, const Point& x) {
  const int n = f.ground_size();
  const double lhs = f(anchor) - x(anchor);
  for (int j = 0; j < n; ++j) {
    const Subset y = anchor.contains(j) ? anchor.without(j) : anchor.with(j);
    const double rhs = f(y) - x(y);
    if (!within(lhs, rhs)) return {false, Violation{y, j, lhs, rhs}, Method::kClosedForm};
  }
  return {true, std::nullopt, Method::kClosedForm};
}

inline double combinations(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

template <SetFunction F>
MembershipVerdict super_outer(const F& f, Subset anchor, int k, int l, const Point& x) {
  const int n = f.ground_size();
  if (k < 1 || l < 1 || k > n || l > n) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "outer bound parameters must satisfy 1 <= k, l <= n; got k=" + std::to_string(k) +
                    ", l=" + std::to_string(l));
  }
  const Subset outside = anchor.complement(n);
  const int inside_count = anchor.size();
  const int outside_count = n - inside_count;
  double layered = 0.0;
  for (int a = 1; a <= k - 1; ++a) {
    for (int b = 1; b <= l - 1; ++b) {
      layered += combinations(outside_count, a) * combinations(inside_count, b);
    }
  }
  if (layered > std::ldexp(1.0, exhaustive_cap())) {
    throw Error(ErrorCode::kCapExceeded, "outer bound would enumerate more than 2^cap sets");
  }

  MembershipVerdict part = check_superdiff_subsets(f, anchor, x);
  if (!part.member) return part;
  const Method base_method = part.method;
  part = check_superdiff_supersets(f, anchor, x);
  if (!part.member) return part;
  const bool restricted =
      base_method != Method::kClosedForm || part.method != Method::kClosedForm || layered > 0;

  // Y = (X - B) ∪ A with A ⊆ V \ X, B ⊆ X, both nonempty, layered by (|A|, |B|).
  const double rhs = f(anchor) - x(anchor);
  std::optional<Violation> first;
  for (int a = 1; a <= k - 1 && !first; ++a) {
    for (int b = 1; b <= l - 1 && !first; ++b) {
      for_each_combination(outside, a, [&](Subset added) {
        if (first) return;
        for_each_combination(anchor, b, [&](Subset removed) {
          if (first) return;
          const Subset y = (anchor - removed) | added;
          const double lhs = f(y) - x(y);
          if (!within(lhs, rhs)) first = Violation{y, std::nullopt, lhs, rhs};
        });
      });
    }
  }
  const Method method = restricted ? Method::kRestrictedEnumeration : Method::kClosedForm;
  return {!first, first, method};
}

template <SetFunction F>
MembershipVerdict inner_box_member(const F& f, Subset anchor, InnerKind kind, const Point& x) {
  const InnerBox box = inner_box(f, anchor, kind);
  for (int j = 0; j < f.ground_size(); ++j) {
    const Subset y = Subset::singleton(j);
    if (anchor.contains(j)) {
      if (!within(x[j], box.bounds[j])) {
        return {false, Violation{y, j, x[j], box.bounds[j]}, Method::kClosedForm};
      }
    } else if (!within(box.bounds[j], x[j])) {
      return {false, Violation{y, j, box.bounds[j], x[j]}, Method::kClosedForm};
    }
  }
  return {true, std::nullopt, Method::kClosedForm};
}

// conv(grow box, shrink box). Both boxes share the recession cone of an
// orthant, so x is in the hull iff one λ ∈ [0, 1] satisfies every coordinate
// of λ·grow + (1 - λ)·shrink. Each coordinate cuts [0, 1] to an interval.
template <SetFunction F>
MembershipVerdict inner_conv(const F& f, Subset anchor, const Point& x) {
  const int n = f.ground_size();
  const InnerBox grow = inner_box(f, anchor, InnerKind::kGrow);
  const InnerBox shrink = inner_box(f, anchor, InnerKind::kShrink);
  double lo = 0.0;
  double hi = 1.0;
  std::optional<int> lo_owner;
  std::optional<int> hi_owner;
  for (int j = 0; j < n; ++j) {
    const double g = grow.bounds[j];
    const double s = shrink.bounds[j];
    // Constraint a·λ >= c.
    double a = g - s;
    double c = x[j] - s - kTolerance;
    if (!anchor.contains(j)) {
      a = -a;
      c = -(x[j] - s + kTolerance);
    }
    if (a > 0.0) {
      const double bound = c / a;
      if (bound > lo) {
        lo = bound;
        lo_owner = j;
      }
    } else if (a < 0.0) {
      const double bound = c / a;
      if (bound < hi) {
        hi = bound;
        hi_owner = j;
      }
    } else if (c > 0.0) {
      return {false, Violation{Subset::singleton(j), j, c, 0.0}, Method::kLambdaInterval};
    }
  }
  if (lo > hi) {
    Subset owners;
    if (lo_owner) owners = owners.with(*lo_owner);
    if (hi_owner) owners = owners.with(*hi_owner);
    const std::optional<int> element =
        owners.size() == 1 ? std::optional<int>(owners.elements()[0]) : std::nullopt;
    return {false, Violation{owners, element, lo, hi}, Method::kLambdaInterval};
  }
  return {true, std::nullopt, Method::kLambdaInterval};
}

}  // namespace detail

template <SetFunction F>
MembershipVerdict membership(const F& f, const PolyhedronDescriptor& desc, const Point& x) {
  const int n = f.ground_size();
  check_point(x, n);
  if (desc.has_anchor() && !desc.anchor.is_subset_of(Subset::full(n))) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "anchor " + desc.anchor.to_string() + " is not a subset of the ground set");
  }
  switch (desc.kind) {
    case PolyhedronKind::kLowerPolyhedron:
      return detail::lower_polyhedron(f, x);
    case PolyhedronKind::kBasePolytope: {
      MembershipVerdict v = detail::lower_polyhedron(f, x);
      if (!v.member) return v;
      const Subset full = Subset::full(n);
      const double fv = f(full);
      const double xv = x(full);
      if (!within(fv, xv)) return {false, Violation{full, std::nullopt, fv, xv}, v.method};
      return v;
    }
    case PolyhedronKind::kUpperPolyhedron:
      return detail::upper_polyhedron(f, x);
    case PolyhedronKind::kSubdifferential:
      return detail::subdifferential(f, desc.anchor, x);
    case PolyhedronKind::kSuperdifferential:
      return detail::superdifferential(f, desc.anchor, x);
    case PolyhedronKind::kSubOuter11:
      return detail::sub_outer11(f, desc.anchor, x);
    case PolyhedronKind::kSuperOuter:
      return detail::super_outer(f, desc.anchor, desc.k, desc.l, x);
    case PolyhedronKind::kInnerBox:
      return detail::inner_box_member(f, desc.anchor, desc.inner, x);
    case PolyhedronKind::kInnerConv:
      return detail::inner_conv(f, desc.anchor, x);
  }
  throw Error(ErrorCode::kDescriptorMismatch, "unknown polyhedron kind");
}

// For submodular f with f(∅) = 0: max_X f(X) > 0 iff some singleton is
// positive. Values within kTolerance of zero count as zero.
template <SetFunction F>
bool positive_max_exists(const F& f) {
  if (!f.flags().normalized) {
    throw Error(ErrorCode::kPrecondition, "positive_max_exists requires a normalized function");
  }
  for (int j = 0; j < f.ground_size(); ++j) {
    if (f(Subset::singleton(j)) > kTolerance) return true;
  }
  return false;
}

}  // namespace submod
