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

#include <concepts>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submod/error.hpp"
#include "submod/subset.hpp"

namespace submod {

// Properties a function claims about itself. Validators check them.
struct Flags {
  bool submodular = false;
  bool monotone = false;
  bool normalized = false;
  bool m_natural_concave = false;

  bool operator==(const Flags&) const = default;
};

// A set function over {0, ..., ground_size() - 1}. Evaluation must be pure.
// operator() is the unchecked hot path; use evaluate() for validated calls.
template <typename F>
concept SetFunction = requires(const F& f, Subset s) {
  { f.ground_size() } -> std::convertible_to<int>;
  { f(s) } -> std::convertible_to<double>;
  { f.flags() } -> std::convertible_to<Flags>;
};

// A vector x in R^n, read as the modular function x(S) = sum_{j in S} x_j.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  static Point zeros(int n) { return Point(std::vector<double>(n, 0.0)); }

  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int j) const { return coords_[j]; }
  double& operator[](int j) { return coords_[j]; }
  const std::vector<double>& coords() const { return coords_; }
  std::span<const double> view() const { return coords_; }

  double operator()(Subset s) const {
    double total = 0.0;
    s.for_each([&](int j) { total += coords_[j]; });
    return total;
  }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

template <SetFunction F>
double evaluate(const F& f, Subset s) {
  check_subset(s, f.ground_size());
  return static_cast<double>(f(s));
}

// f(j | S) = f(S + j) - f(S); zero when j is already in S.
template <SetFunction F>
double gain(const F& f, int j, Subset s) {
  check_element(j, f.ground_size());
  check_subset(s, f.ground_size());
  if (s.contains(j)) return 0.0;
  return f(s.with(j)) - f(s);
}

namespace detail {
// Unchecked f(j | S) for j not in S.
template <SetFunction F>
double gain_unchecked(const F& f, int j, Subset s) {
  return f(s.with(j)) - f(s);
}
}  // namespace detail

// Wraps any callable as a SetFunction. Used for library-supplied evaluators
// and for test-only families.
class CustomFunction {
 public:
  CustomFunction(int n, std::function<double(Subset)> eval, Flags flags = {})
      : n_(n), eval_(std::move(eval)), flags_(flags) {
    GroundSet check(n);
    (void)check;
  }

  int ground_size() const { return n_; }
  Flags flags() const { return flags_; }
  double operator()(Subset s) const { return eval_(s); }

 private:
  int n_;
  std::function<double(Subset)> eval_;
  Flags flags_;
};

// g(X) = f(V) - f(V \ X). Supermodular when f is submodular.
template <SetFunction F>
class DualFunction {
 public:
  explicit DualFunction(F f) : f_(std::move(f)), full_value_(f_(Subset::full(f_.ground_size()))) {}

  int ground_size() const { return f_.ground_size(); }
  Flags flags() const {
    Flags out;
    out.normalized = true;
    out.monotone = f_.flags().monotone;
    return out;
  }
  double operator()(Subset s) const {
    return full_value_ - f_(s.complement(f_.ground_size()));
  }
  const F& primal() const { return f_; }

 private:
  F f_;
  double full_value_;
};

template <SetFunction F>
DualFunction<F> dual(F f) {
  return DualFunction<F>(std::move(f));
}

// f'(S) = f(S) - f(∅).
template <SetFunction F>
class NormalizedFunction {
 public:
  explicit NormalizedFunction(F f) : f_(std::move(f)), empty_value_(f_(Subset::empty())) {}

  int ground_size() const { return f_.ground_size(); }
  Flags flags() const {
    Flags out = f_.flags();
    out.normalized = true;
    return out;
  }
  double operator()(Subset s) const { return f_(s) - empty_value_; }

 private:
  F f_;
  double empty_value_;
};

template <SetFunction F>
NormalizedFunction<F> normalize(F f) {
  return NormalizedFunction<F>(std::move(f));
}

// h(S) = f(S) - x(S). Turns membership questions into optimization over
// subsets. Holds references; the caller keeps f and x alive.
template <SetFunction F>
class ShiftedFunction {
 public:
  ShiftedFunction(const F& f, const Point& x) : f_(&f), x_(&x) {}

  int ground_size() const { return f_->ground_size(); }
  Flags flags() const {
    Flags out;
    out.submodular = f_->flags().submodular;
    out.normalized = f_->flags().normalized;
    return out;
  }
  double operator()(Subset s) const { return (*f_)(s) - (*x_)(s); }

 private:
  const F* f_;
  const Point* x_;
};

inline void check_point(const Point& x, int n) {
  if (x.size() != n) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, ground set has " +
                    std::to_string(n));
  }
}

}  // namespace submod
