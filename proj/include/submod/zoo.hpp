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

// The closed family of concrete set functions the toolkit ships with.
//
// Every family evaluates to 0 on the empty set before the offset is added, so
// f(∅) = offset. Natural flags are derived from the parameters; a caller may
// declare different flags with with_flags(), which validators then check.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {
namespace zoo {

struct Modular {
  std::vector<double> weights;
};

// f(S) = total weight of items covered by the elements of S.
struct Coverage {
  std::vector<std::vector<int>> covers;  // element -> covered item ids
  std::vector<double> item_weights;      // empty means unit weights
};

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
  bool operator==(const Edge&) const = default;
};

// f(S) = total weight of edges with exactly one endpoint in S.
struct GraphCut {
  std::vector<Edge> edges;
};

enum class ConcaveShape { kSqrt, kLog1p, kCappedLinear };

// f(S) = phi(w(S)) with phi one of sqrt, log(1 + t), min(t, budget).
struct ConcaveOverModular {
  ConcaveShape shape = ConcaveShape::kSqrt;
  std::vector<double> weights;
  double budget = 0.0;
};

// f(S) = min(|S|, rank).
struct UniformMatroid {
  int rank = 0;
};

// f(S) = sum_i min(|S ∩ B_i|, c_i); the blocks partition the ground set.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

// f(S) = |S|^2. Supermodular; kept as a negative control for validators.
struct SquaredCardinality {};

using Family = std::variant<Modular, Coverage, GraphCut, ConcaveOverModular, UniformMatroid,
                            PartitionMatroid, SquaredCardinality>;

inline std::string_view shape_name(ConcaveShape shape) {
  switch (shape) {
    case ConcaveShape::kSqrt: return "sqrt";
    case ConcaveShape::kLog1p: return "log1p";
    case ConcaveShape::kCappedLinear: return "capped_linear";
  }
  return "sqrt";
}

inline ConcaveShape parse_shape(std::string_view name) {
  if (name == "sqrt") return ConcaveShape::kSqrt;
  if (name == "log1p") return ConcaveShape::kLog1p;
  if (name == "capped_linear") return ConcaveShape::kCappedLinear;
  throw Error(ErrorCode::kParse, "unknown concave shape '" + std::string(name) + "'");
}

inline std::string_view family_name(const Family& family) {
  struct Visitor {
    std::string_view operator()(const Modular&) const { return "modular"; }
    std::string_view operator()(const Coverage&) const { return "coverage"; }
    std::string_view operator()(const GraphCut&) const { return "graph_cut"; }
    std::string_view operator()(const ConcaveOverModular&) const { return "concave_over_modular"; }
    std::string_view operator()(const UniformMatroid&) const { return "matroid_rank"; }
    std::string_view operator()(const PartitionMatroid&) const { return "matroid_rank"; }
    std::string_view operator()(const SquaredCardinality&) const { return "squared_cardinality"; }
  };
  return std::visit(Visitor{}, family);
}

}  // namespace zoo

class ZooFunction {
 public:
  ZooFunction(int n, zoo::Family family, double offset = 0.0)
      : n_(n), family_(std::move(family)), offset_(offset) {
    GroundSet check(n);
    (void)check;
    compile();
    flags_ = natural_flags();
  }

  static ZooFunction modular(std::vector<double> weights, double offset = 0.0) {
    const int n = static_cast<int>(weights.size());
    return ZooFunction(n, zoo::Modular{std::move(weights)}, offset);
  }
  static ZooFunction coverage(std::vector<std::vector<int>> covers,
                              std::vector<double> item_weights = {}, double offset = 0.0) {
    const int n = static_cast<int>(covers.size());
    return ZooFunction(n, zoo::Coverage{std::move(covers), std::move(item_weights)}, offset);
  }
  static ZooFunction graph_cut(int n, std::vector<zoo::Edge> edges, double offset = 0.0) {
    return ZooFunction(n, zoo::GraphCut{std::move(edges)}, offset);
  }
  static ZooFunction concave_over_modular(zoo::ConcaveShape shape, std::vector<double> weights,
                                          double budget = 0.0, double offset = 0.0) {
    const int n = static_cast<int>(weights.size());
    return ZooFunction(n, zoo::ConcaveOverModular{shape, std::move(weights), budget}, offset);
  }
  static ZooFunction uniform_matroid(int n, int rank, double offset = 0.0) {
    return ZooFunction(n, zoo::UniformMatroid{rank}, offset);
  }
  static ZooFunction partition_matroid(int n, std::vector<std::vector<int>> blocks,
                                       std::vector<int> capacities, double offset = 0.0) {
    return ZooFunction(n, zoo::PartitionMatroid{std::move(blocks), std::move(capacities)},
                       offset);
  }
  static ZooFunction squared_cardinality(int n, double offset = 0.0) {
    return ZooFunction(n, zoo::SquaredCardinality{}, offset);
  }

  int ground_size() const { return n_; }
  Flags flags() const { return flags_; }
  const zoo::Family& family() const { return family_; }
  double offset() const { return offset_; }

  // A copy carrying caller-declared flags instead of the natural ones.
  ZooFunction with_flags(Flags declared) const {
    ZooFunction out = *this;
    out.flags_ = declared;
    return out;
  }

  ZooFunction normalized() const {
    ZooFunction out = *this;
    out.offset_ = 0.0;
    out.flags_.normalized = true;
    return out;
  }

  // Flags implied by the family and its parameters.
  Flags natural_flags() const {
    Flags out;
    out.normalized = offset_ == 0.0;
    std::visit(
        [&](const auto& fam) {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, zoo::Modular>) {
            out.submodular = true;
            out.m_natural_concave = true;
            out.monotone = std::all_of(fam.weights.begin(), fam.weights.end(),
                                       [](double w) { return w >= 0.0; });
          } else if constexpr (std::is_same_v<T, zoo::Coverage>) {
            out.submodular = true;
            out.monotone = true;
          } else if constexpr (std::is_same_v<T, zoo::GraphCut>) {
            out.submodular = true;
            out.monotone = fam.edges.empty();
          } else if constexpr (std::is_same_v<T, zoo::ConcaveOverModular>) {
            out.submodular = true;
            out.monotone = true;
            // Concave of cardinality is M-natural concave; general weights are not.
            out.m_natural_concave =
                std::adjacent_find(fam.weights.begin(), fam.weights.end(),
                                   std::not_equal_to<>()) == fam.weights.end();
          } else if constexpr (std::is_same_v<T, zoo::UniformMatroid> ||
                               std::is_same_v<T, zoo::PartitionMatroid>) {
            out.submodular = true;
            out.monotone = true;
            out.m_natural_concave = true;
          } else {
            out.monotone = true;
          }
        },
        family_);
    return out;
  }

  double operator()(Subset s) const { return offset_ + raw(s); }

  bool operator==(const ZooFunction& o) const {
    return n_ == o.n_ && offset_ == o.offset_ && flags_ == o.flags_ && same_family(o);
  }

 private:
  double raw(Subset s) const {
    switch (family_.index()) {
      case 0: {
        const auto& w = std::get<zoo::Modular>(family_).weights;
        double total = 0.0;
        s.for_each([&](int j) { total += w[j]; });
        return total;
      }
      case 1: {
        const auto& cov = std::get<zoo::Coverage>(family_);
        std::vector<std::uint64_t> covered(words_, 0);
        s.for_each([&](int j) {
          const auto& bits = cover_bits_[j];
          for (std::size_t w = 0; w < words_; ++w) covered[w] |= bits[w];
        });
        double total = 0.0;
        for (std::size_t w = 0; w < words_; ++w) {
          for (std::uint64_t m = covered[w]; m != 0; m &= m - 1) {
            const std::size_t item = w * 64 + std::countr_zero(m);
            total += cov.item_weights.empty() ? 1.0 : cov.item_weights[item];
          }
        }
        return total;
      }
      case 2: {
        double total = 0.0;
        for (const auto& e : std::get<zoo::GraphCut>(family_).edges) {
          if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
        }
        return total;
      }
      case 3: {
        const auto& com = std::get<zoo::ConcaveOverModular>(family_);
        double t = 0.0;
        s.for_each([&](int j) { t += com.weights[j]; });
        switch (com.shape) {
          case zoo::ConcaveShape::kSqrt: return std::sqrt(t);
          case zoo::ConcaveShape::kLog1p: return std::log1p(t);
          case zoo::ConcaveShape::kCappedLinear: return std::min(t, com.budget);
        }
        return 0.0;
      }
      case 4:
        return std::min(s.size(), std::get<zoo::UniformMatroid>(family_).rank);
      case 5: {
        const auto& pm = std::get<zoo::PartitionMatroid>(family_);
        double total = 0.0;
        for (std::size_t b = 0; b < block_masks_.size(); ++b) {
          total += std::min((s & block_masks_[b]).size(), pm.capacities[b]);
        }
        return total;
      }
      default: {
        const double k = s.size();
        return k * k;
      }
    }
  }

  void compile() {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::kPrecondition, msg); };
    if (!std::isfinite(offset_)) fail("offset must be finite");
    std::visit(
        [&](const auto& fam) {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, zoo::Modular>) {
            if (static_cast<int>(fam.weights.size()) != n_) fail("modular: need n weights");
            for (double w : fam.weights) {
              if (!std::isfinite(w)) fail("modular: weights must be finite");
            }
          } else if constexpr (std::is_same_v<T, zoo::Coverage>) {
            if (static_cast<int>(fam.covers.size()) != n_) fail("coverage: need n cover lists");
            int items = 0;
            for (const auto& list : fam.covers) {
              for (int item : list) {
                if (item < 0) fail("coverage: negative item id");
                items = std::max(items, item + 1);
              }
            }
            if (!fam.item_weights.empty()) {
              if (static_cast<int>(fam.item_weights.size()) < items) {
                fail("coverage: item_weights shorter than the largest item id");
              }
              items = static_cast<int>(fam.item_weights.size());
              for (double w : fam.item_weights) {
                if (!(w >= 0.0) || !std::isfinite(w)) fail("coverage: item weights must be >= 0");
              }
            }
            words_ = (static_cast<std::size_t>(items) + 63) / 64;
            cover_bits_.assign(n_, std::vector<std::uint64_t>(words_, 0));
            for (int j = 0; j < n_; ++j) {
              for (int item : fam.covers[j]) {
                cover_bits_[j][item / 64] |= std::uint64_t{1} << (item % 64);
              }
            }
          } else if constexpr (std::is_same_v<T, zoo::GraphCut>) {
            for (const auto& e : fam.edges) {
              if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
                throw Error(ErrorCode::kIndexOutOfRange, "graph_cut: edge endpoint out of range");
              }
              if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
                fail("graph_cut: edge weights must be >= 0");
              }
            }
          } else if constexpr (std::is_same_v<T, zoo::ConcaveOverModular>) {
            if (static_cast<int>(fam.weights.size()) != n_) {
              fail("concave_over_modular: need n weights");
            }
            for (double w : fam.weights) {
              if (!(w >= 0.0) || !std::isfinite(w)) {
                fail("concave_over_modular: weights must be >= 0");
              }
            }
            if (fam.shape == zoo::ConcaveShape::kCappedLinear &&
                (!(fam.budget >= 0.0) || !std::isfinite(fam.budget))) {
              fail("concave_over_modular: budget must be >= 0");
            }
          } else if constexpr (std::is_same_v<T, zoo::UniformMatroid>) {
            if (fam.rank < 0 || fam.rank > n_) fail("matroid_rank: rank must lie in [0, n]");
          } else if constexpr (std::is_same_v<T, zoo::PartitionMatroid>) {
            if (fam.blocks.size() != fam.capacities.size()) {
              fail("matroid_rank: one capacity per block");
            }
            Subset seen;
            block_masks_.clear();
            for (const auto& block : fam.blocks) {
              Subset b;
              for (int j : block) {
                if (j < 0 || j >= n_) {
                  throw Error(ErrorCode::kIndexOutOfRange, "matroid_rank: block element out of range");
                }
                if (seen.contains(j)) fail("matroid_rank: blocks must be disjoint");
                seen = seen.with(j);
                b = b.with(j);
              }
              block_masks_.push_back(b);
            }
            if (seen != Subset::full(n_)) fail("matroid_rank: blocks must cover the ground set");
            for (int c : fam.capacities) {
              if (c < 0) fail("matroid_rank: capacities must be >= 0");
            }
          }
        },
        family_);
  }

  bool same_family(const ZooFunction& o) const {
    if (family_.index() != o.family_.index()) return false;
    return std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          const auto& b = std::get<T>(o.family_);
          if constexpr (std::is_same_v<T, zoo::Modular>) {
            return a.weights == b.weights;
          } else if constexpr (std::is_same_v<T, zoo::Coverage>) {
            return a.covers == b.covers && a.item_weights == b.item_weights;
          } else if constexpr (std::is_same_v<T, zoo::GraphCut>) {
            return a.edges == b.edges;
          } else if constexpr (std::is_same_v<T, zoo::ConcaveOverModular>) {
            return a.shape == b.shape && a.weights == b.weights && a.budget == b.budget;
          } else if constexpr (std::is_same_v<T, zoo::UniformMatroid>) {
            return a.rank == b.rank;
          } else if constexpr (std::is_same_v<T, zoo::PartitionMatroid>) {
            return a.blocks == b.blocks && a.capacities == b.capacities;
          } else {
            return true;
          }
        },
        family_);
  }

  int n_;
  zoo::Family family_;
  double offset_;
  Flags flags_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> cover_bits_;
  std::vector<Subset> block_masks_;
};

static_assert(SetFunction<ZooFunction>);

}  // namespace submod
