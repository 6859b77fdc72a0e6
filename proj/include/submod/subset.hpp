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

// Ground sets, bit-indexed subsets, permutations and the exhaustive cap.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "submod/error.hpp"

namespace submod {

// Largest ground set representable by a Subset mask.
inline constexpr int kMaxGroundSize = 63;

// Hard ceiling on the configurable exhaustive cap.
inline constexpr int kMaxExhaustiveCap = 30;
inline constexpr int kDefaultExhaustiveCap = 20;

// Absolute tolerance used for every floating point comparison in the library.
inline constexpr double kTolerance = 1e-9;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}

  Subset(std::initializer_list<int> elements) {
    for (int j : elements) {
      if (j < 0 || j >= kMaxGroundSize) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "element " + std::to_string(j) + " out of range");
      }
      mask_ |= std::uint64_t{1} << j;
    }
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int j : elements) {
      if (j < 0 || j >= kMaxGroundSize) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "element " + std::to_string(j) + " out of range");
      }
      s.mask_ |= std::uint64_t{1} << j;
    }
    return s;
  }

  static constexpr Subset empty() { return Subset(); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(int j) { return Subset(std::uint64_t{1} << j); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(int j) const { return (mask_ >> j) & 1u; }

  constexpr Subset with(int j) const { return Subset(mask_ | (std::uint64_t{1} << j)); }
  constexpr Subset without(int j) const { return Subset(mask_ & ~(std::uint64_t{1} << j)); }
  constexpr Subset complement(int n) const { return Subset(full(n).mask_ & ~mask_); }

  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool is_superset_of(Subset other) const { return other.is_subset_of(*this); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](int j) {
      if (!first) os << ',';
      os << j;
      first = false;
    });
    os << '}';
    return os.str();
  }

 private:
  std::uint64_t mask_ = 0;
};

// Calls fn(T) for every T with T ⊆ s, in ascending mask order (∅ first).
template <typename Fn>
void for_each_subset_of(Subset s, Fn&& fn) {
  const std::uint64_t m = s.mask();
  std::uint64_t t = 0;
  while (true) {
    fn(Subset(t));
    if (t == m) break;
    t = (t - m) & m;
  }
}

// Calls fn(T) for every T with s ⊆ T ⊆ V, in ascending mask order.
template <typename Fn>
void for_each_superset_of(Subset s, int n, Fn&& fn) {
  for_each_subset_of(s.complement(n), [&](Subset extra) { fn(s | extra); });
}

// Calls fn(T) for every T ⊆ pool with |T| = k, in lexicographic order of
// element indices.
template <typename Fn>
void for_each_combination(Subset pool, int k, Fn&& fn) {
  const std::vector<int> items = pool.elements();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset t;
    for (int i : idx) t = t.with(items[i]);
    fn(t);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int r = i + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
  }
}

class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > kMaxGroundSize) {
      throw Error(ErrorCode::kPrecondition,
                  "ground set size must be in [1, " + std::to_string(kMaxGroundSize) +
                      "], got " + std::to_string(n));
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
      throw Error(ErrorCode::kPrecondition, "labels must have exactly n entries");
    }
  }

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset full() const { return Subset::full(n_); }

  bool contains(Subset s) const { return s.is_subset_of(full()); }

  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
  std::vector<std::string> labels_;
};

inline void check_subset(Subset s, int n, const char* what = "subset") {
  if (!s.is_subset_of(Subset::full(n))) {
    throw Error(ErrorCode::kIndexOutOfRange,
                std::string(what) + " " + s.to_string() + " has elements outside [0, " +
                    std::to_string(n) + ")");
  }
}

inline void check_element(int j, int n) {
  if (j < 0 || j >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "element " + std::to_string(j) + " outside [0, " + std::to_string(n) + ")");
  }
}

namespace detail {

inline int cap_from_environment() {
  if (const char* env = std::getenv("SUBMOD_EXHAUSTIVE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxExhaustiveCap) {
      return static_cast<int>(v);
    }
  }
  return kDefaultExhaustiveCap;
}

inline std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{cap_from_environment()};
  return cap;
}

}  // namespace detail

// Largest ground set on which 2^n enumeration is allowed. Defaults to 20 and
// honours SUBMOD_EXHAUSTIVE_CAP at first use.
inline int exhaustive_cap() { return detail::cap_storage().load(std::memory_order_relaxed); }

inline void set_exhaustive_cap(int cap) {
  if (cap < 1 || cap > kMaxExhaustiveCap) {
    throw Error(ErrorCode::kPrecondition,
                "exhaustive cap must be in [1, " + std::to_string(kMaxExhaustiveCap) + "]");
  }
  detail::cap_storage().store(cap, std::memory_order_relaxed);
}

// Throws kCapExceeded when enumerating 2^bits sets is not allowed.
inline void require_enumerable(int bits, const char* operation) {
  if (bits > exhaustive_cap()) {
    throw Error(ErrorCode::kCapExceeded,
                std::string(operation) + " would enumerate 2^" + std::to_string(bits) +
                    " sets; exhaustive cap is " + std::to_string(exhaustive_cap()));
  }
}

class Permutation {
 public:
  explicit Permutation(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    if (n < 1 || n > kMaxGroundSize) {
      throw Error(ErrorCode::kPrecondition, "permutation length out of range");
    }
    std::vector<char> seen(n, 0);
    for (int v : order_) {
      if (v < 0 || v >= n || seen[v]) {
        throw Error(ErrorCode::kPrecondition,
                    "permutation is not a bijection of 0.." + std::to_string(n - 1));
      }
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return Permutation(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int position) const { return order_[position]; }
  const std::vector<int>& order() const { return order_; }

  // The i-th chain set: the first i elements of the order.
  Subset chain(int i) const {
    Subset s;
    for (int p = 0; p < i; ++p) s = s.with(order_[p]);
    return s;
  }

  // Position of the first element that breaks "X occupies the first |X|
  // positions", if any.
  std::optional<int> first_prefix_violation(Subset x) const {
    const int k = x.size();
    for (int p = 0; p < size(); ++p) {
      if ((p < k) != x.contains(order_[p])) return p;
    }
    return std::nullopt;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> order_;
};

}  // namespace submod
