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

#include <cmath>
#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "naive_oracle.hpp"
#include "submod/random.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"
#include "submod/validate.hpp"
#include "submod/zoo.hpp"

namespace submod {
namespace {

using zoo::ConcaveShape;

TEST(Subset, BasicOperations) {
  const Subset s{0, 2};
  EXPECT_EQ(s.mask(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.with(1), Subset::full(3));
  EXPECT_EQ(s.complement(3), Subset{1});
  EXPECT_EQ(s - Subset{0}, Subset{2});
  EXPECT_EQ(s.to_string(), "{0,2}");
  EXPECT_EQ(s.elements(), (std::vector<int>{0, 2}));
  EXPECT_THROW(Subset{63}, Error);
}

TEST(Subset, EnumerationHelpersVisitEachSetOnce) {
  std::vector<std::uint64_t> seen;
  for_each_subset_of(Subset{0, 2, 3}, [&](Subset t) { seen.push_back(t.mask()); });
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));

  int supersets = 0;
  for_each_superset_of(Subset{1}, 4, [&](Subset t) {
    EXPECT_TRUE(t.contains(1));
    ++supersets;
  });
  EXPECT_EQ(supersets, 8);

  int pairs = 0;
  for_each_combination(Subset::full(5), 2, [&](Subset t) {
    EXPECT_EQ(t.size(), 2);
    ++pairs;
  });
  EXPECT_EQ(pairs, 10);
}

TEST(GroundSet, RejectsBadSizes) {
  EXPECT_THROW(GroundSet(0), Error);
  EXPECT_THROW(GroundSet(64), Error);
  EXPECT_NO_THROW(GroundSet(63));
  EXPECT_THROW(GroundSet(2, {"a"}), Error);
}

TEST(Permutation, ValidatesBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
  EXPECT_THROW(Permutation({0, 3, 1}), Error);
  const Permutation p({2, 0, 1});
  EXPECT_EQ(p.chain(2), (Subset{0, 2}));
  EXPECT_EQ(p.first_prefix_violation(Subset{2}), std::nullopt);
  EXPECT_EQ(p.first_prefix_violation(Subset{0}), 0);
}

TEST(Evaluate, ChecksRanges) {
  const auto f = ZooFunction::modular({3, -1});
  EXPECT_DOUBLE_EQ(evaluate(f, Subset{0, 1}), 2.0);
  try {
    evaluate(f, Subset{2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_THROW(gain(f, 5, Subset{}), Error);
  EXPECT_DOUBLE_EQ(gain(f, 0, Subset{0}), 0.0);
}

TEST(Zoo, SqrtOfCardinality) {
  const auto f = ZooFunction::concave_over_modular(ConcaveShape::kSqrt, {1, 1, 1});
  EXPECT_NEAR(f(Subset{0, 1}), 1.41421356, 1e-8);
  EXPECT_NEAR(gain(f, 2, Subset{0, 1}), 0.31784, 1e-5);
}

TEST(Zoo, FamilyValues) {
  const auto cov = ZooFunction::coverage({{0, 1}, {1, 2}, {3}}, {1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(cov(Subset{0, 1}), 6.0);
  EXPECT_DOUBLE_EQ(cov(Subset::full(3)), 10.0);

  const auto cut = ZooFunction::graph_cut(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_DOUBLE_EQ(cut(Subset{0}), 2.0);
  EXPECT_DOUBLE_EQ(cut(Subset::full(3)), 0.0);

  const auto capped =
      ZooFunction::concave_over_modular(ConcaveShape::kCappedLinear, {1, 2, 3}, 2.5);
  EXPECT_DOUBLE_EQ(capped(Subset{0}), 1.0);
  EXPECT_DOUBLE_EQ(capped(Subset{1, 2}), 2.5);

  const auto logf = ZooFunction::concave_over_modular(ConcaveShape::kLog1p, {1, 1});
  EXPECT_DOUBLE_EQ(logf(Subset{0, 1}), std::log1p(2.0));

  const auto um = ZooFunction::uniform_matroid(4, 2);
  EXPECT_DOUBLE_EQ(um(Subset{0, 1, 3}), 2.0);

  const auto pm = ZooFunction::partition_matroid(4, {{0, 1}, {2, 3}}, {1, 2});
  EXPECT_DOUBLE_EQ(pm(Subset::full(4)), 3.0);
  EXPECT_DOUBLE_EQ(pm(Subset{0, 1}), 1.0);

  const auto sq = ZooFunction::squared_cardinality(3, 1.0);
  EXPECT_DOUBLE_EQ(sq(Subset{0, 2}), 5.0);
  EXPECT_FALSE(sq.flags().normalized);
}

TEST(Zoo, RejectsBadParameters) {
  EXPECT_THROW(ZooFunction::coverage({{0, -1}}), Error);
  EXPECT_THROW(ZooFunction::graph_cut(2, {{0, 2, 1}}), Error);
  EXPECT_THROW(ZooFunction::graph_cut(2, {{0, 1, -1}}), Error);
  EXPECT_THROW(ZooFunction::uniform_matroid(3, 4), Error);
  EXPECT_THROW(ZooFunction::partition_matroid(3, {{0, 1}, {1, 2}}, {1, 1}), Error);
  EXPECT_THROW(ZooFunction::concave_over_modular(ConcaveShape::kSqrt, {1, -1}), Error);
}

TEST(Wrappers, DualAndNormalize) {
  const auto f = ZooFunction::concave_over_modular(ConcaveShape::kSqrt, {1, 1, 1}, 0.0, 2.0);
  const auto g = normalize(f);
  EXPECT_DOUBLE_EQ(g(Subset{}), 0.0);
  EXPECT_NEAR(g(Subset{0}), 1.0, 1e-12);
  const auto d = dual(f);
  // f#(X) = f(V) - f(V \ X)
  EXPECT_NEAR(d(Subset{0}), std::sqrt(3.0) - std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(d(Subset{}), 0.0);
  EXPECT_FALSE(d.flags().submodular);
}

TEST(Cap, SetterBoundsAndEnforcement) {
  const int saved = exhaustive_cap();
  EXPECT_THROW(set_exhaustive_cap(0), Error);
  EXPECT_THROW(set_exhaustive_cap(31), Error);
  set_exhaustive_cap(4);
  try {
    require_enumerable(5, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(validate(ZooFunction::uniform_matroid(5, 2), Property::kSubmodularity), Error);
  set_exhaustive_cap(saved);
}

TEST(Validate, DetectsSquaredCardinality) {
  const auto sq = ZooFunction::squared_cardinality(3);
  const auto rep = validate(sq, Property::kSubmodularity);
  ASSERT_FALSE(rep.holds);
  ASSERT_TRUE(rep.counterexample.has_value());
  // The gain at the smaller set falls below the gain at the larger one.
  EXPECT_TRUE(rep.counterexample->s.is_subset_of(rep.counterexample->t));
  EXPECT_LT(rep.counterexample->lhs, rep.counterexample->rhs);
  EXPECT_TRUE(validate(sq, Property::kMonotonicity).holds);
  EXPECT_FALSE(validate(ZooFunction::modular({1, 1}, 0.5), Property::kNormalization).holds);
}

TEST(Validate, MNaturalOnKnownFamilies) {
  EXPECT_TRUE(validate(ZooFunction::uniform_matroid(5, 2), Property::kMNaturalConcavity).holds);
  EXPECT_TRUE(validate(ZooFunction::partition_matroid(4, {{0, 1}, {2, 3}}, {1, 2}),
                       Property::kMNaturalConcavity)
                  .holds);
  // Square root of a non-uniformly weighted sum is submodular but not M-natural.
  const auto f = ZooFunction::concave_over_modular(ConcaveShape::kSqrt, {1, 4, 9});
  EXPECT_TRUE(validate(f, Property::kSubmodularity).holds);
  // Symmetric coverage is a concave function of cardinality, hence M-natural.
  EXPECT_TRUE(validate(ZooFunction::coverage({{0, 1}, {1, 2}, {0, 2}}),
                       Property::kMNaturalConcavity)
                  .holds);
  // Exchange fails at X = {0, 2}, Y = {1}.
  const auto cov = ZooFunction::coverage({{0}, {0, 1}, {1}});
  EXPECT_TRUE(validate(cov, Property::kSubmodularity).holds);
  EXPECT_FALSE(validate(cov, Property::kMNaturalConcavity).holds);
}

// The two-element gain test must agree with the pairwise definition.
TEST(ValidateProperty, AgreesWithPairwiseDefinition) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 5);
    const auto base = random_function_from(kAllRandomFamilies, n, rng);
    // Mix in a random supermodular term half of the time.
    const double bend = coin(rng, 0.5) ? uniform_real(rng, 0.0, 1.0) : 0.0;
    const CustomFunction f(n, [&](Subset s) { return base(s) + bend * s.size() * s.size(); });
    EXPECT_EQ(validate(f, Property::kSubmodularity).holds, naive::submodular(f, n));
    EXPECT_EQ(validate(f, Property::kMonotonicity).holds, naive::monotone(f, n));
  }
}

// Every zoo family declares flags that actually hold.
TEST(ZooProperty, NaturalFlagsHold) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const auto f = random_function_from(kAllRandomFamilies, n, rng);
    EXPECT_FALSE(validate_declared_flags(f).has_value())
        << zoo::family_name(f.family()) << " n=" << n;
    if (f.flags().submodular) {
      EXPECT_TRUE(naive::submodular(f, n));
    }
    if (f.flags().monotone) {
      EXPECT_TRUE(naive::monotone(f, n));
    }
  }
}

TEST(Random, SeedReproducesDraws) {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    const auto fa = random_function_from(kAllRandomFamilies, 5, a);
    const auto fb = random_function_from(kAllRandomFamilies, 5, b);
    EXPECT_EQ(fa, fb);
  }
}

}  // namespace
}  // namespace submod
