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

// Command dispatch for the `submod` tool. run() is pure apart from reading
// instance and config files, so tests drive it in-process.
//
// Exit codes: 0 success, 2 a mathematical negative (non-membership, failed
// certificate or validation), 1 error.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "submod/bounds.hpp"
#include "submod/brute_force.hpp"
#include "submod/error.hpp"
#include "submod/instance.hpp"
#include "submod/optimize.hpp"
#include "submod/polyhedra.hpp"
#include "submod/set_function.hpp"
#include "submod/sweep.hpp"
#include "submod/validate.hpp"

namespace submod::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "submod";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

struct Outcome {
  int exit_code = kExitOk;
  // Per-trial records streamed before the report (sweep only).
  std::vector<json> stream;
  json report;
  // Plain text to print instead of a report (help output).
  std::optional<std::string> text;
};

// Text written to standard output: stream records one per line, then the
// report, pretty-printed.
inline std::string render(const Outcome& outcome) {
  if (outcome.text) return *outcome.text;
  std::string out;
  for (const auto& line : outcome.stream) out += line.dump() + "\n";
  out += outcome.report.dump(2) + "\n";
  return out;
}

namespace detail {

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_list(std::string spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) spec.erase(0, 1);
  if (!spec.empty() && (spec.back() == '}' || spec.back() == ']')) spec.pop_back();
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

inline int parse_int_token(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw Error(ErrorCode::kMissingName, "no " + what + " named '" + token + "'");
  }
  return value;
}

inline Subset resolve_set(const Instance& inst, const std::string& spec) {
  if (auto it = inst.sets.find(spec); it != inst.sets.end()) return it->second;
  if (spec == "empty" || spec == "{}" || spec == "[]") return Subset::empty();
  if (spec == "all" || spec == "full") return inst.ground.full();
  Subset s;
  for (const auto& token : split_list(spec)) {
    const int e = parse_int_token(token, "set");
    check_element(e, inst.ground.size());
    s = s.with(e);
  }
  if (s.is_empty()) throw Error(ErrorCode::kMissingName, "no set named '" + spec + "'");
  return s;
}

inline Point resolve_point(const Instance& inst, const std::string& spec) {
  if (auto it = inst.points.find(spec); it != inst.points.end()) return it->second;
  std::vector<double> coords;
  for (const auto& token : split_list(spec)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::kMissingName, "no point named '" + spec + "'");
    }
    coords.push_back(v);
  }
  if (coords.empty()) throw Error(ErrorCode::kMissingName, "no point named '" + spec + "'");
  check_point(Point(coords), inst.ground.size());
  return Point(std::move(coords));
}

inline Permutation resolve_permutation(int n, const std::string& spec) {
  if (spec == "identity") return Permutation::identity(n);
  std::vector<int> order;
  for (const auto& token : split_list(spec)) order.push_back(parse_int_token(token, "permutation"));
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kUsage, "permutation must list all " + std::to_string(n) + " elements");
  }
  return Permutation(std::move(order));
}

inline PolyhedronDescriptor resolve_polyhedron(const std::string& name, Subset x, int k, int l) {
  if (name == "lower") return PolyhedronDescriptor::lower();
  if (name == "base") return PolyhedronDescriptor::base();
  if (name == "upper") return PolyhedronDescriptor::upper();
  if (name == "subdiff") return PolyhedronDescriptor::subdifferential(x);
  if (name == "superdiff") return PolyhedronDescriptor::superdifferential(x);
  if (name == "sub-outer11") return PolyhedronDescriptor::sub_outer11(x);
  if (name == "super-outer") return PolyhedronDescriptor::super_outer(x, k, l);
  if (name == "inner-grow") return PolyhedronDescriptor::inner_box(x, InnerKind::kGrow);
  if (name == "inner-shrink") return PolyhedronDescriptor::inner_box(x, InnerKind::kShrink);
  if (name == "inner-bar") return PolyhedronDescriptor::inner_box(x, InnerKind::kBar);
  if (name == "inner-conv") return PolyhedronDescriptor::inner_conv(x);
  throw Error(ErrorCode::kUsage, "unknown polyhedron '" + name + "'");
}

inline json violation_json(const std::optional<Violation>& v) {
  if (!v) return nullptr;
  return json{{"set", v->set.elements()},
              {"element", v->element ? json(*v->element) : json(nullptr)},
              {"lhs", v->lhs},
              {"rhs", v->rhs}};
}

inline json counterexample_json(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return json{{"s", c->s.elements()},
              {"t", c->t.elements()},
              {"element", c->element ? json(*c->element) : json(nullptr)},
              {"lhs", c->lhs},
              {"rhs", c->rhs}};
}

inline json trace_json(const OptResult& r) {
  json trace = json::array();
  for (const auto& [s, v] : r.trace) trace.push_back({{"set", s.elements()}, {"value", v}});
  return trace;
}

// Options shared by every command; each subcommand binds the ones it uses.
struct Options {
  std::string instance;
  bool trust_flags = false;
  std::string set = "empty";
  std::string at;
  std::string point;
  std::string perm;
  std::string poly;
  std::string kind;
  std::string property;
  std::string method = "brute";
  std::string start = "empty";
  std::string config;
  std::string suite;
  std::string family;
  int element = -1;
  int k = 1;
  int l = 1;
  int n_min = 2;
  int n_max = 6;
  std::uint64_t seed = 1;
  int reps = 10;
  int points = 20;
};

struct CommandResult {
  json result;
  bool negative = false;
};

inline CommandResult run_instance_command(const std::string& name, const Options& o,
                                          const Instance& inst) {
  const ZooFunction& f = inst.function;
  const int n = inst.ground.size();
  CommandResult out;
  json& r = out.result;

  if (name == "eval") {
    const Subset s = resolve_set(inst, o.set);
    const double value = evaluate(f, s);
    r = {{"set", s.elements()}, {"value", value}};
  } else if (name == "gain") {
    const Subset s = resolve_set(inst, o.set);
    const double value = gain(f, o.element, s);
    r = {{"element", o.element}, {"set", s.elements()}, {"value", value}};
  } else if (name == "vertex") {
    const Permutation order = resolve_permutation(n, o.perm);
    const Point h = greedy_vertex(f, order);
    r = {{"permutation", order.order()}, {"point", h.coords()}};
  } else if (name == "subdiff-vertex") {
    const Subset x = resolve_set(inst, o.set);
    const Permutation order = resolve_permutation(n, o.perm);
    const Point h = subdiff_vertex(f, x, order);
    r = {{"anchor", x.elements()}, {"permutation", order.order()}, {"point", h.coords()}};
  } else if (name == "member") {
    const Subset x = resolve_set(inst, o.set);
    const Point p = resolve_point(inst, o.point);
    const PolyhedronDescriptor desc = resolve_polyhedron(o.poly, x, o.k, o.l);
    const MembershipVerdict v = membership(f, desc, p);
    json poly = {{"kind", o.poly}};
    if (desc.has_anchor()) poly["anchor"] = x.elements();
    if (desc.kind == PolyhedronKind::kSuperOuter) {
      poly["k"] = o.k;
      poly["l"] = o.l;
    }
    r = {{"polyhedron", poly},
         {"point", p.coords()},
         {"member", v.member},
         {"method", std::string(to_string(v.method))},
         {"witness", violation_json(v.witness)}};
    out.negative = !v.member;
  } else if (name == "supergradient") {
    const Subset x = resolve_set(inst, o.set);
    const SupergradientKind kind = parse_supergradient_kind(o.kind);
    const Point g = supergradient(f, x, kind);
    r = {{"anchor", x.elements()}, {"kind", std::string(to_string(kind))}, {"point", g.coords()}};
  } else if (name == "bound-eval") {
    const Subset x = resolve_set(inst, o.set);
    r = {{"anchor", x.elements()}, {"kind", o.kind}, {"anchor_value", f(x)}};
    std::function<double(Subset)> bound;
    bool upper = true;
    if (o.kind == "grow" || o.kind == "shrink" || o.kind == "bar") {
      const ModularBound mb = modular_upper_bound(f, x, parse_supergradient_kind(o.kind));
      r["base"] = mb.base.coords();
      bound = mb;
    } else if (o.kind == "lower") {
      const ModularBound mb = modular_lower_bound(f, x, resolve_permutation(n, o.perm));
      r["base"] = mb.base.coords();
      bound = mb;
      upper = false;
    } else if (o.kind == "nemhauser-one" || o.kind == "nemhauser-two") {
      bound = nemhauser_bound(f, x, o.kind == "nemhauser-one" ? NemhauserKind::kOne
                                                              : NemhauserKind::kTwo);
    } else {
      throw Error(ErrorCode::kUsage, "unknown bound kind '" + o.kind + "'");
    }
    r["direction"] = upper ? "upper" : "lower";
    auto holds_at = [&](Subset y) {
      return upper ? within(f(y), bound(y)) : within(bound(y), f(y));
    };
    if (!o.at.empty()) {
      const Subset y = resolve_set(inst, o.at);
      r["at"] = y.elements();
      r["bound"] = bound(y);
      r["value"] = f(y);
      r["holds"] = holds_at(y);
      out.negative = !holds_at(y);
    } else {
      require_enumerable(n, "bound-eval over all subsets");
      json first = nullptr;
      for_each_subset_of(Subset::full(n), [&](Subset y) {
        if (first.is_null() && !holds_at(y)) {
          first = {{"set", y.elements()}, {"bound", bound(y)}, {"value", f(y)}};
        }
      });
      r["holds"] = first.is_null();
      r["first_violation"] = first;
      out.negative = !first.is_null();
    }
  } else if (name == "minimize" || name == "maximize") {
    const Direction dir = name == "minimize" ? Direction::kMinimize : Direction::kMaximize;
    OptResult res;
    if (o.method == "brute") {
      res = brute_force_optimize(f, dir);
    } else if (o.method == "local") {
      res = local_search(f, dir, resolve_set(inst, o.start));
    } else {
      throw Error(ErrorCode::kUsage, "unknown method '" + o.method + "'");
    }
    r = {{"method", o.method},
         {"direction", std::string(to_string(dir))},
         {"argset", res.argset.elements()},
         {"value", res.value},
         {"evaluations", res.evaluations}};
    if (o.method == "local") r["trace"] = trace_json(res);
  } else if (name == "third-max") {
    const OptResult res = one_third_max(f, resolve_set(inst, o.start));
    r = {{"argset", res.argset.elements()},
         {"value", res.value},
         {"evaluations", res.evaluations},
         {"trace", trace_json(res)}};
    if (n <= exhaustive_cap()) {
      const double opt = brute_force_optimize(f, Direction::kMaximize).value;
      const double ratio = opt > kTolerance ? res.value / opt : 1.0;
      r["opt"] = opt;
      r["ratio"] = ratio;
      r["guarantee_met"] = res.value >= opt / 3.0 - kTolerance;
      out.negative = !r["guarantee_met"].get<bool>();
    }
  } else if (name == "certify") {
    const Subset a = resolve_set(inst, o.set);
    const CertificateKind kind = parse_certificate_kind(o.kind);
    const Certificate c = certificate(f, a, kind);
    r = {{"kind", std::string(to_string(kind))},
         {"candidate", a.elements()},
         {"holds", c.holds},
         {"method", std::string(to_string(c.method))},
         {"witness", violation_json(c.witness)}};
    out.negative = !c.holds;
  } else if (name == "validate") {
    const Property prop = parse_property(o.property);
    const ValidationReport v = validate(f, prop);
    r = {{"property", std::string(to_string(prop))},
         {"holds", v.holds},
         {"counterexample", counterexample_json(v.counterexample)}};
    out.negative = !v.holds;
  } else {
    throw Error(ErrorCode::kUsage, "unknown command '" + name + "'");
  }
  return out;
}

inline SweepConfig sweep_config(const Options& o, const CLI::App& sub) {
  SweepConfig c;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorCode::kParse, "cannot open sweep config '" + o.config + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, std::string("sweep config: ") + e.what());
    }
    try {
      if (doc.contains("suite")) c.suite = parse_sweep_suite(doc["suite"].get<std::string>());
      if (doc.contains("family")) c.family = doc["family"].get<std::string>();
      if (doc.contains("n_min")) c.n_min = doc["n_min"].get<int>();
      if (doc.contains("n_max")) c.n_max = doc["n_max"].get<int>();
      if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
      if (doc.contains("reps")) c.reps = doc["reps"].get<int>();
      if (doc.contains("points")) c.points = doc["points"].get<int>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("sweep config: ") + e.what());
    }
  }
  if (sub.count("--suite")) c.suite = parse_sweep_suite(o.suite);
  if (sub.count("--family")) c.family = o.family;
  if (sub.count("--n-min")) c.n_min = o.n_min;
  if (sub.count("--n-max")) c.n_max = o.n_max;
  if (sub.count("--seed")) c.seed = o.seed;
  if (sub.count("--reps")) c.reps = o.reps;
  if (sub.count("--points")) c.points = o.points;
  if (o.config.empty() && !sub.count("--suite")) {
    throw Error(ErrorCode::kUsage, "sweep needs --suite or --config");
  }
  return c;
}

}  // namespace detail

inline const std::vector<std::string>& instance_commands() {
  static const std::vector<std::string> names = {
      "eval",          "gain",       "vertex",   "subdiff-vertex", "member",  "supergradient",
      "bound-eval",    "minimize",   "maximize", "third-max",      "certify", "validate"};
  return names;
}

inline Outcome run(const std::vector<std::string>& args) {
  const auto started = std::chrono::steady_clock::now();
  detail::Options o;
  CLI::App app{"Sub- and superdifferential toolkit for submodular set functions", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::vector<CLI::App*> subs;
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance,-i", o.instance, "Instance file (JSON)")->required();
    sub->add_flag("--trust-flags", o.trust_flags, "Skip re-validating declared flags");
    subs.push_back(sub);
    return sub;
  };
  auto set_opt = [&](CLI::App* sub, const char* help) {
    sub->add_option("--set,-s", o.set, help)->capture_default_str();
  };

  auto* eval = add_instance(app.add_subcommand("eval", "Evaluate f(S)"));
  set_opt(eval, "Subset S: a named set, 'empty', 'all' or an index list like 0,2");
  auto* gain_cmd = add_instance(app.add_subcommand("gain", "Marginal gain f(j | S)"));
  gain_cmd->add_option("--element,-j", o.element, "Element j")->required();
  set_opt(gain_cmd, "Subset S");
  auto* vertex = add_instance(app.add_subcommand("vertex", "Greedy extreme point of the base polytope"));
  vertex->add_option("--perm,-p", o.perm, "Permutation, e.g. 2,0,1 or 'identity'")->required();
  auto* subv = add_instance(app.add_subcommand("subdiff-vertex", "Extreme subgradient at X"));
  set_opt(subv, "Anchor X");
  subv->add_option("--perm,-p", o.perm, "Permutation listing X first")->required();
  auto* member = add_instance(app.add_subcommand("member", "Polyhedron membership"));
  member->add_option("--poly", o.poly,
                     "lower|base|upper|subdiff|superdiff|sub-outer11|super-outer|"
                     "inner-grow|inner-shrink|inner-bar|inner-conv")
      ->required();
  member->add_option("--point,-x", o.point, "Named point or coordinate list")->required();
  set_opt(member, "Anchor X");
  member->add_option("--k", o.k, "Outer bound k")->capture_default_str();
  member->add_option("--l", o.l, "Outer bound l")->capture_default_str();
  auto* sg = add_instance(app.add_subcommand("supergradient", "Closed-form supergradient at X"));
  set_opt(sg, "Anchor X");
  sg->add_option("--kind", o.kind, "grow|shrink|bar|tilde")->required();
  auto* be = add_instance(app.add_subcommand("bound-eval", "Evaluate a tight bound anchored at X"));
  set_opt(be, "Anchor X");
  be->add_option("--kind", o.kind, "grow|shrink|bar|lower|nemhauser-one|nemhauser-two")->required();
  be->add_option("--perm,-p", o.perm, "Permutation for --kind lower");
  be->add_option("--at", o.at, "Evaluate at Y; without it, check the bound on every subset");
  for (const char* nm : {"minimize", "maximize"}) {
    auto* opt = add_instance(app.add_subcommand(nm, std::string(nm) + " f"));
    opt->add_option("--method", o.method, "brute|local")->capture_default_str();
    opt->add_option("--start", o.start, "Start set for local search")->capture_default_str();
  }
  auto* third = add_instance(app.add_subcommand("third-max", "Local maximum and its complement"));
  third->add_option("--start", o.start, "Start set")->capture_default_str();
  auto* cert = add_instance(app.add_subcommand("certify", "Check an optimality condition at A"));
  set_opt(cert, "Candidate A");
  cert->add_option("--kind", o.kind,
                   "global-min|local-min|local-max|global-max-exact|global-max-sufficient")
      ->required();
  auto* val = add_instance(app.add_subcommand("validate", "Exhaustively check a property"));
  val->add_option("--property", o.property,
                  "submodularity|monotonicity|normalization|m_natural_concavity")
      ->required();

  auto* sweep = app.add_subcommand("sweep", "Seeded randomized property sweep");
  sweep->add_option("--config", o.config, "JSON config with suite, family, n_min, n_max, seed, reps, points");
  sweep->add_option("--suite", o.suite,
                    "third-max|hierarchy|m-natural|fujishige|supergradients|positive-max");
  sweep->add_option("--family", o.family, "any|nonneg|m_natural or a single family name");
  sweep->add_option("--n-min", o.n_min);
  sweep->add_option("--n-max", o.n_max);
  sweep->add_option("--seed", o.seed);
  sweep->add_option("--reps", o.reps);
  sweep->add_option("--points", o.points);

  Outcome outcome;
  json& report = outcome.report;
  report["format_version"] = kReportFormatVersion;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["command"] = {{"name", args.empty() ? "" : args.front()}, {"argv", args}};
  report["instance_digest"] = nullptr;
  report["result"] = nullptr;

  auto fail = [&](const std::string& code, const std::string& message, json extra = nullptr) {
    outcome.exit_code = kExitError;
    report["status"] = "error";
    json err = {{"code", code}, {"message", message}};
    if (!extra.is_null()) err["counterexample"] = extra;
    report["error"] = err;
  };

  try {
    if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
      const auto& known = instance_commands();
      if (args.front() != "sweep" &&
          std::find(known.begin(), known.end(), args.front()) == known.end()) {
        throw Error(ErrorCode::kUsage, "unknown command '" + args.front() + "'");
      }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    report["command"]["name"] = name;

    if (name == "sweep") {
      const SweepConfig config = detail::sweep_config(o, *sweep);
      SweepOutput so = run_sweep(config);
      for (auto& t : so.trials) {
        json line = {{"kind", "trial"}, {"suite", std::string(to_string(config.suite))}};
        line.update(t);
        outcome.stream.push_back(std::move(line));
      }
      const bool clean = so.summary["violations"].get<std::int64_t>() == 0;
      report["result"] = so.summary;
      report["status"] = clean ? "ok" : "negative";
      outcome.exit_code = clean ? kExitOk : kExitNegative;
    } else {
      const Instance inst = load_instance(o.instance, ParseOptions{o.trust_flags});
      report["instance_digest"] = instance_digest(inst);
      const detail::CommandResult cr = detail::run_instance_command(name, o, inst);
      report["result"] = cr.result;
      report["status"] = cr.negative ? "negative" : "ok";
      outcome.exit_code = cr.negative ? kExitNegative : kExitOk;
    }
  } catch (const CLI::CallForHelp&) {
    outcome.text = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    outcome.exit_code = kExitOk;
    return outcome;
  } catch (const CLI::CallForVersion&) {
    outcome.text = std::string(kToolVersion) + "\n";
    outcome.exit_code = kExitOk;
    return outcome;
  } catch (const CLI::ParseError& e) {
    fail(std::string(to_string(ErrorCode::kUsage)), e.what());
  } catch (const ValidationError& e) {
    fail(std::string(to_string(e.code())), e.what(),
         detail::counterexample_json(e.report().counterexample));
  } catch (const Error& e) {
    fail(std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    fail("internal_error", e.what());
  }
  report["exit_code"] = outcome.exit_code;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return outcome;
}

}  // namespace submod::cli
