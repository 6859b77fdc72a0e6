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

// Instance files: a JSON document naming a ground set, one zoo function and
// optional named points and subsets.
//
//   {
//     "format_version": 1,
//     "ground_set": {"n": 3, "labels": ["a", "b", "c"]},
//     "function": {"family": "graph_cut", "edges": [[0, 1, 1.0], [1, 2]],
//                  "offset": 0, "flags": {"submodular": true}},
//     "points": {"g": [1, 1, 1]},
//     "sets": {"X": [0, 2]}
//   }
//
// Element indices are 0-based. Subsets are sorted index arrays. Flags that
// are omitted take the family's natural value.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "submod/error.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"
#include "submod/validate.hpp"
#include "submod/zoo.hpp"

namespace submod {

inline constexpr int kInstanceFormatVersion = 1;

struct Instance {
  GroundSet ground{1};
  ZooFunction function = ZooFunction::modular({0.0});
  std::map<std::string, Point> points;
  std::map<std::string, Subset> sets;
};

// A declared flag that enumeration refutes.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error(ErrorCode::kValidation, describe(report)), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

  static std::string describe(const ValidationReport& r) {
    std::ostringstream os;
    os << "declared property '" << to_string(r.property) << "' does not hold";
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      os << ": S=" << c.s.to_string() << " T=" << c.t.to_string();
      if (c.element) os << " j=" << *c.element;
      os << " lhs=" << c.lhs << " rhs=" << c.rhs;
    }
    return os.str();
  }

 private:
  ValidationReport report_;
};

struct ParseOptions {
  // Skip re-validating declared flags.
  bool trust_flags = false;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, "field '" + path + "': " + what);
}

inline const json& require_key(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                           const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) field_error(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
  }
}

inline double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

inline int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) field_error(path, "integer out of range");
  return static_cast<int>(v);
}

inline std::vector<double> as_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::vector<int> as_ints(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::vector<std::vector<int>> as_int_lists(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of integer arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_ints(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline Subset as_subset(const json& j, int n, const std::string& path) {
  Subset s;
  const std::vector<int> items = as_ints(j, path);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int e = items[i];
    if (e < 0 || e >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "field '" + path + "[" + std::to_string(i) + "]': element " +
                      std::to_string(e) + " outside [0, " + std::to_string(n) + ")");
    }
    if (s.contains(e)) field_error(path, "duplicate element " + std::to_string(e));
    s = s.with(e);
  }
  return s;
}

inline zoo::Family parse_family(const json& fn, int n, const std::string& name) {
  const std::string path = "function";
  if (name == "modular") {
    reject_unknown(fn, {"family", "offset", "flags", "weights"}, path);
    return zoo::Modular{as_numbers(require_key(fn, "weights", path), path + ".weights")};
  }
  if (name == "coverage") {
    reject_unknown(fn, {"family", "offset", "flags", "covers", "item_weights"}, path);
    zoo::Coverage c;
    c.covers = as_int_lists(require_key(fn, "covers", path), path + ".covers");
    if (fn.contains("item_weights")) {
      c.item_weights = as_numbers(fn["item_weights"], path + ".item_weights");
    }
    return c;
  }
  if (name == "graph_cut") {
    reject_unknown(fn, {"family", "offset", "flags", "edges"}, path);
    const json& edges = require_key(fn, "edges", path);
    if (!edges.is_array()) field_error(path + ".edges", "expected an array of edges");
    zoo::GraphCut g;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string ep = path + ".edges[" + std::to_string(i) + "]";
      const json& e = edges[i];
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        field_error(ep, "expected [u, v] or [u, v, weight]");
      }
      zoo::Edge edge{as_int(e[0], ep + "[0]"), as_int(e[1], ep + "[1]"), 1.0};
      if (e.size() == 3) edge.weight = as_number(e[2], ep + "[2]");
      g.edges.push_back(edge);
    }
    return g;
  }
  if (name == "concave_over_modular") {
    reject_unknown(fn, {"family", "offset", "flags", "shape", "weights", "budget"}, path);
    const json& shape = require_key(fn, "shape", path);
    if (!shape.is_string()) field_error(path + ".shape", "expected a string");
    zoo::ConcaveOverModular c;
    try {
      c.shape = zoo::parse_shape(shape.get<std::string>());
    } catch (const Error& e) {
      field_error(path + ".shape", e.what());
    }
    c.weights = as_numbers(require_key(fn, "weights", path), path + ".weights");
    if (c.shape == zoo::ConcaveShape::kCappedLinear) {
      c.budget = as_number(require_key(fn, "budget", path), path + ".budget");
    } else if (fn.contains("budget")) {
      field_error(path + ".budget", "only valid for capped_linear");
    }
    return c;
  }
  if (name == "matroid_rank") {
    const json& kind = require_key(fn, "matroid", path);
    if (!kind.is_string()) field_error(path + ".matroid", "expected a string");
    if (kind == "uniform") {
      reject_unknown(fn, {"family", "offset", "flags", "matroid", "rank"}, path);
      return zoo::UniformMatroid{as_int(require_key(fn, "rank", path), path + ".rank")};
    }
    if (kind == "partition") {
      reject_unknown(fn, {"family", "offset", "flags", "matroid", "blocks", "capacities"}, path);
      return zoo::PartitionMatroid{
          as_int_lists(require_key(fn, "blocks", path), path + ".blocks"),
          as_ints(require_key(fn, "capacities", path), path + ".capacities")};
    }
    field_error(path + ".matroid", "expected 'uniform' or 'partition'");
  }
  if (name == "squared_cardinality") {
    reject_unknown(fn, {"family", "offset", "flags"}, path);
    return zoo::SquaredCardinality{};
  }
  (void)n;
  field_error(path + ".family", "unknown family '" + name + "'");
}

inline json family_to_json(const ZooFunction& f) {
  json out;
  out["family"] = std::string(zoo::family_name(f.family()));
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, zoo::Modular>) {
          out["weights"] = fam.weights;
        } else if constexpr (std::is_same_v<T, zoo::Coverage>) {
          out["covers"] = fam.covers;
          if (!fam.item_weights.empty()) out["item_weights"] = fam.item_weights;
        } else if constexpr (std::is_same_v<T, zoo::GraphCut>) {
          json edges = json::array();
          for (const auto& e : fam.edges) edges.push_back({e.u, e.v, e.weight});
          out["edges"] = edges;
        } else if constexpr (std::is_same_v<T, zoo::ConcaveOverModular>) {
          out["shape"] = std::string(zoo::shape_name(fam.shape));
          out["weights"] = fam.weights;
          if (fam.shape == zoo::ConcaveShape::kCappedLinear) out["budget"] = fam.budget;
        } else if constexpr (std::is_same_v<T, zoo::UniformMatroid>) {
          out["matroid"] = "uniform";
          out["rank"] = fam.rank;
        } else if constexpr (std::is_same_v<T, zoo::PartitionMatroid>) {
          out["matroid"] = "partition";
          out["blocks"] = fam.blocks;
          out["capacities"] = fam.capacities;
        }
      },
      f.family());
  return out;
}

inline json flags_to_json(const Flags& flags) {
  return json{{"submodular", flags.submodular},
              {"monotone", flags.monotone},
              {"normalized", flags.normalized},
              {"m_natural_concave", flags.m_natural_concave}};
}

inline Flags parse_flags(const json& j, Flags defaults) {
  const std::string path = "function.flags";
  if (!j.is_object()) field_error(path, "expected an object");
  reject_unknown(j, {"submodular", "monotone", "normalized", "m_natural_concave"}, path);
  auto read = [&](const char* key, bool& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_boolean()) field_error(path + "." + key, "expected a boolean");
    slot = j[key].get<bool>();
  };
  read("submodular", defaults.submodular);
  read("monotone", defaults.monotone);
  read("normalized", defaults.normalized);
  read("m_natural_concave", defaults.m_natural_concave);
  return defaults;
}

}  // namespace detail

inline nlohmann::json subset_to_json(Subset s) { return s.elements(); }

inline Instance instance_from_json(const nlohmann::json& doc, const ParseOptions& options = {}) {
  using detail::field_error;
  using detail::require_key;
  if (!doc.is_object()) field_error("", "instance must be a JSON object");
  detail::reject_unknown(doc, {"format_version", "ground_set", "function", "points", "sets"}, "");
  if (doc.contains("format_version")) {
    const int version = detail::as_int(doc["format_version"], "format_version");
    if (version != kInstanceFormatVersion) {
      field_error("format_version", "unsupported version " + std::to_string(version));
    }
  }

  const nlohmann::json& gs = require_key(doc, "ground_set", "");
  detail::reject_unknown(gs, {"n", "labels"}, "ground_set");
  const int n = detail::as_int(require_key(gs, "n", "ground_set"), "ground_set.n");
  if (n < 1 || n > kMaxGroundSize) {
    field_error("ground_set.n", "must be in [1, " + std::to_string(kMaxGroundSize) + "]");
  }
  std::vector<std::string> labels;
  if (gs.contains("labels")) {
    const auto& lj = gs["labels"];
    if (!lj.is_array()) field_error("ground_set.labels", "expected an array of strings");
    for (std::size_t i = 0; i < lj.size(); ++i) {
      if (!lj[i].is_string()) {
        field_error("ground_set.labels[" + std::to_string(i) + "]", "expected a string");
      }
      labels.push_back(lj[i].get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n) field_error("ground_set.labels", "need n labels");
  }

  const nlohmann::json& fn = require_key(doc, "function", "");
  const nlohmann::json& family = require_key(fn, "family", "function");
  if (!family.is_string()) field_error("function.family", "expected a string");
  double offset = 0.0;
  if (fn.contains("offset")) offset = detail::as_number(fn["offset"], "function.offset");

  Instance inst;
  inst.ground = GroundSet(n, std::move(labels));
  try {
    inst.function = ZooFunction(n, detail::parse_family(fn, n, family.get<std::string>()), offset);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kPrecondition) {
      throw Error(ErrorCode::kParse, std::string("field 'function': ") + e.what());
    }
    throw;
  }
  if (fn.contains("flags")) {
    inst.function = inst.function.with_flags(
        detail::parse_flags(fn["flags"], inst.function.natural_flags()));
  }

  if (doc.contains("points")) {
    const auto& pts = doc["points"];
    if (!pts.is_object()) field_error("points", "expected an object of named vectors");
    for (auto it = pts.begin(); it != pts.end(); ++it) {
      const std::string path = "points." + it.key();
      std::vector<double> coords = detail::as_numbers(it.value(), path);
      if (static_cast<int>(coords.size()) != n) field_error(path, "need n coordinates");
      inst.points.emplace(it.key(), Point(std::move(coords)));
    }
  }
  if (doc.contains("sets")) {
    const auto& sets = doc["sets"];
    if (!sets.is_object()) field_error("sets", "expected an object of named index arrays");
    for (auto it = sets.begin(); it != sets.end(); ++it) {
      inst.sets.emplace(it.key(), detail::as_subset(it.value(), n, "sets." + it.key()));
    }
  }

  if (!options.trust_flags) {
    if (auto failure = validate_declared_flags(inst.function)) throw ValidationError(*failure);
  }
  return inst;
}

inline Instance parse_instance(const std::string& text, const ParseOptions& options = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + e.what());
  }
  return instance_from_json(doc, options);
}

inline Instance load_instance(const std::string& path, const ParseOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), options);
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json doc;
  doc["format_version"] = kInstanceFormatVersion;
  doc["ground_set"]["n"] = inst.ground.size();
  if (!inst.ground.labels().empty()) doc["ground_set"]["labels"] = inst.ground.labels();
  nlohmann::json fn = detail::family_to_json(inst.function);
  fn["offset"] = inst.function.offset();
  fn["flags"] = detail::flags_to_json(inst.function.flags());
  doc["function"] = fn;
  if (!inst.points.empty()) {
    nlohmann::json pts = nlohmann::json::object();
    for (const auto& [name, p] : inst.points) pts[name] = p.coords();
    doc["points"] = pts;
  }
  if (!inst.sets.empty()) {
    nlohmann::json sets = nlohmann::json::object();
    for (const auto& [name, s] : inst.sets) sets[name] = subset_to_json(s);
    doc["sets"] = sets;
  }
  return doc;
}

inline std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

// 64-bit FNV-1a over the canonical compact serialization.
inline std::string instance_digest(const Instance& inst) {
  const std::string canonical = instance_to_json(inst).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
  return out;
}

}  // namespace submod
