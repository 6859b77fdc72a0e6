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

#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "submod/instance.hpp"
#include "submod/random.hpp"

namespace submod {
namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(SUBMOD_FIXTURE_DIR) + "/" + name; }

ErrorCode code_of(const std::string& text, ParseOptions options = {}) {
  try {
    parse_instance(text, options);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kUsage;
}

std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Instance, MinimalModular) {
  const Instance inst = load_instance(fixture("modular.json"));
  EXPECT_EQ(inst.ground.size(), 2);
  EXPECT_DOUBLE_EQ(evaluate(inst.function, Subset{0, 1}), 2.0);
  EXPECT_EQ(inst.sets.at("both"), (Subset{0, 1}));
}

TEST(Instance, TriangleCutFlagsValidate) {
  const Instance inst = load_instance(fixture("triangle_cut.json"));
  EXPECT_TRUE(inst.function.flags().submodular);
  EXPECT_EQ(inst.ground.labels().size(), 3u);
}

TEST(Instance, SquaredCardinalityDeclaredSubmodularIsRejected) {
  try {
    load_instance(fixture("squared_invalid.json"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
    EXPECT_EQ(e.report().property, Property::kSubmodularity);
    ASSERT_TRUE(e.report().counterexample.has_value());
  }
  EXPECT_NO_THROW(load_instance(fixture("squared_invalid.json"), ParseOptions{true}));
}

TEST(Instance, SyntaxErrorsCarryLineAndColumn) {
  const std::string text = "{\n  \"ground_set\": {\"n\": 2},\n  \"function\": oops\n}";
  EXPECT_EQ(code_of(text), ErrorCode::kParse);
  EXPECT_NE(message_of(text).find("line 3"), std::string::npos) << message_of(text);
}

TEST(Instance, FieldErrorsNameThePath) {
  const std::string bad_weight =
      R"({"ground_set": {"n": 3}, "function": {"family": "modular", "weights": [1, 2, "x"]}})";
  EXPECT_NE(message_of(bad_weight).find("function.weights[2]"), std::string::npos)
      << message_of(bad_weight);
  const std::string unknown =
      R"({"ground_set": {"n": 1}, "function": {"family": "modular", "weights": [1], "colour": 1}})";
  EXPECT_NE(message_of(unknown).find("colour"), std::string::npos);
  EXPECT_EQ(code_of(R"({"ground_set": {"n": 0}, "function": {"family": "modular", "weights": []}})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"format_version": 2, "ground_set": {"n": 1},
                        "function": {"family": "modular", "weights": [1]}})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"ground_set": {"n": 2}, "function": {"family": "nope"}})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"ground_set": {"n": 2}, "function": {"family": "modular", "weights": [1, 1]},
                        "sets": {"X": [0, 2]}})"),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of(R"({"ground_set": {"n": 2}, "function": {"family": "modular", "weights": [1, 1]},
                        "points": {"p": [1]}})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"ground_set": {"n": 2},
                        "function": {"family": "concave_over_modular", "shape": "capped_linear",
                                     "weights": [1, 1]}})"),
            ErrorCode::kParse);
}

TEST(Instance, DeclaredMonotoneOnCutIsRejected) {
  const std::string text = R"({"ground_set": {"n": 2},
      "function": {"family": "graph_cut", "edges": [[0, 1]], "flags": {"monotone": true}}})";
  EXPECT_EQ(code_of(text), ErrorCode::kValidation);
  EXPECT_NO_THROW(parse_instance(text, ParseOptions{true}));
}

// parse → serialize → parse is the identity, and the digest is stable.
TEST(InstanceProperty, FixturesRoundTrip) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(SUBMOD_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    const Instance a = load_instance(entry.path().string(), ParseOptions{true});
    const std::string text = serialize_instance(a);
    const Instance b = parse_instance(text, ParseOptions{true});
    EXPECT_EQ(serialize_instance(b), text) << entry.path();
    EXPECT_EQ(a.function, b.function) << entry.path();
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.sets, b.sets);
    EXPECT_EQ(instance_digest(a), instance_digest(b));
  }
  EXPECT_GE(count, 5);
}

TEST(InstanceProperty, RandomInstancesRoundTrip) {
  Rng rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 8);
    Instance inst;
    inst.ground = GroundSet(n);
    inst.function = random_function_from(kAllRandomFamilies, n, rng);
    inst.sets["S"] = random_subset(n, rng);
    inst.points["p"] = Point(std::vector<double>(n, uniform_real(rng, -1, 1)));
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(back.function, inst.function);
    EXPECT_EQ(serialize_instance(back), text);
    for_each_subset_of(Subset::full(n), [&](Subset s) {
      EXPECT_DOUBLE_EQ(back.function(s), inst.function(s));
    });
  }
}

TEST(Instance, DigestFormat) {
  const Instance inst = load_instance(fixture("modular.json"));
  const std::string d = instance_digest(inst);
  EXPECT_EQ(d.rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(d.size(), 8u + 16u);
  Instance other = inst;
  other.sets["extra"] = Subset{0};
  EXPECT_NE(instance_digest(other), d);
}

}  // namespace
}  // namespace submod
