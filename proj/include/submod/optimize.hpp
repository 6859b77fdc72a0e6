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

// Local search, the complement-pair 1/3 approximation, and optimality
// certificates phrased as membership of the zero vector.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "submod/brute_force.hpp"
#include "submod/error.hpp"
#include "submod/polyhedra.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"

namespace submod {

inline Direction parse_direction(std::string_view name) {
  if (name == "min" || name == "minimize") return Direction::kMinimize;
  if (name == "max" || name == "maximize") return Direction::kMaximize;
  throw Error(ErrorCode::kUsage, "unknown direction '" + std::string(name) + "'");
}

// First-improvement search over single-element additions and deletions.
// Elements are scanned in ascending order and the scan restarts after every
// accepted move. A move is accepted only if it improves by more than
// kTolerance, so the result is a Hamming-one local optimum up to that slack.
template <SetFunction F>
OptResult local_search(const F& f, Direction direction, Subset start = Subset::empty()) {
  const int n = f.ground_size();
  check_subset(start, n, "start");
  OptResult result{start, f(start), 1, {}};
  result.trace.emplace_back(start, result.value);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int j = 0; j < n; ++j) {
      const Subset candidate = result.argset.contains(j) ? result.argset.without(j)
                                                         : result.argset.with(j);
      const double value = f(candidate);
      ++result.evaluations;
      const double delta =
          direction == Direction::kMaximize ? value - result.value : result.value - value;
      if (delta > kTolerance) {
        result.argset = candidate;
        result.value = value;
        result.trace.emplace_back(candidate, value);
        improved = true;
        break;
      }
    }
  }
  return result;
}

// Local maximum A, then the better of A and V \ A. For nonnegative
// submodular f this is at least a third of the optimum.
template <SetFunction F>
OptResult one_third_max(const F& f, Subset start = Subset::empty()) {
  const Flags flags = f.flags();
  if (!flags.submodular || !flags.normalized) {
    throw Error(ErrorCode::kPrecondition,
                "one_third_max requires a function declared submodular and normalized");
  }
  OptResult local = local_search(f, Direction::kMaximize, start);
  const Subset other = local.argset.complement(f.ground_size());
  const double other_value = f(other);
  ++local.evaluations;
  if (other_value > local.value) {
    local.argset = other;
    local.value = other_value;
    local.trace.emplace_back(other, other_value);
  }
  return local;
}

enum class CertificateKind {
  kGlobalMin,            // 0 ∈ ∂_f(A)
  kLocalMin,             // 0 in the Hamming-one relaxation of ∂_f(A)
  kLocalMax,             // 0 in the Hamming-one relaxation of ∂^f(A)
  kGlobalMaxExact,       // 0 ∈ ∂^f(A)
  kGlobalMaxSufficient,  // 0 in conv(grow box, shrink box) at A
};

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kGlobalMin: return "global-min";
    case CertificateKind::kLocalMin: return "local-min";
    case CertificateKind::kLocalMax: return "local-max";
    case CertificateKind::kGlobalMaxExact: return "global-max-exact";
    case CertificateKind::kGlobalMaxSufficient: return "global-max-sufficient";
  }
  return "global-min";
}

inline CertificateKind parse_certificate_kind(std::string_view name) {
  for (auto k : {CertificateKind::kGlobalMin, CertificateKind::kLocalMin,
                 CertificateKind::kLocalMax, CertificateKind::kGlobalMaxExact,
                 CertificateKind::kGlobalMaxSufficient}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::kUsage, "unknown certificate kind '" + std::string(name) + "'");
}

struct Certificate {
  CertificateKind kind = CertificateKind::kGlobalMin;
  bool holds = true;
  std::optional<Violation> witness;
  Method method = Method::kClosedForm;
};

inline PolyhedronDescriptor certificate_polyhedron(CertificateKind kind, Subset a) {
  switch (kind) {
    case CertificateKind::kGlobalMin: return PolyhedronDescriptor::subdifferential(a);
    case CertificateKind::kLocalMin: return PolyhedronDescriptor::sub_outer11(a);
    case CertificateKind::kLocalMax: return PolyhedronDescriptor::super_outer(a, 1, 1);
    case CertificateKind::kGlobalMaxExact: return PolyhedronDescriptor::superdifferential(a);
    case CertificateKind::kGlobalMaxSufficient: return PolyhedronDescriptor::inner_conv(a);
  }
  throw Error(ErrorCode::kUsage, "unknown certificate kind");
}

// Decides the optimality condition `kind` at A. For GlobalMin with a
// submodular f only subsets and supersets of A are compared against f(A).
template <SetFunction F>
Certificate certificate(const F& f, Subset a, CertificateKind kind) {
  check_subset(a, f.ground_size(), "candidate");
  const MembershipVerdict verdict =
      membership(f, certificate_polyhedron(kind, a), Point::zeros(f.ground_size()));
  return Certificate{kind, verdict.member, verdict.witness, verdict.method};
}

}  // namespace submod
