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

// Samplers shared by the unit tests and the acceptance binary.

#pragma once

#include <vector>

#include "submod/bounds.hpp"
#include "submod/polyhedra.hpp"
#include "submod/random.hpp"

namespace testing_util {

using submod::Point;
using submod::Rng;
using submod::Subset;

// A point that sits on, near, or well away from the polyhedron boundaries
// at X: a blend of the closed-form supergradients with a random extreme
// subgradient, plus noise that is often zero or tiny.
template <typename F>
Point boundary_point(const F& f, Subset x, Rng& rng) {
  using submod::SupergradientKind;
  const int n = f.ground_size();
  std::vector<Point> anchors = {
      submod::supergradient(f, x, SupergradientKind::kGrow),
      submod::supergradient(f, x, SupergradientKind::kShrink),
      submod::supergradient(f, x, SupergradientKind::kBar),
      submod::supergradient(f, x, SupergradientKind::kTilde),
  };
  if (std::abs(f(Subset{})) <= submod::kTolerance) {
    anchors.push_back(
        submod::subdiff_vertex(f, x, submod::random_prefix_permutation(x, n, rng)));
  }
  const int picks = submod::uniform_int(rng, 1, 2);
  Point out = Point::zeros(n);
  double total = 0.0;
  std::vector<double> weights(anchors.size(), 0.0);
  for (int p = 0; p < picks; ++p) {
    const int i = submod::uniform_int(rng, 0, static_cast<int>(anchors.size()) - 1);
    const double w = submod::uniform01(rng) + 0.05;
    weights[i] += w;
    total += w;
  }
  double scale = 0.1;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      out[j] += weights[i] / total * anchors[i][j];
      scale = std::max(scale, std::abs(anchors[i][j]));
    }
  }
  switch (submod::uniform_int(rng, 0, 3)) {
    case 0: return out;
    case 1: return submod::perturb(out, 1e-6 * scale, rng);
    case 2: return submod::perturb(out, 0.1 * scale, rng);
    default: return submod::perturb(out, scale, rng);
  }
}

// Functions from every zoo family, optionally with a nonzero offset.
inline submod::ZooFunction any_function(int n, Rng& rng, bool allow_offset = false) {
  auto f = submod::random_function_from(submod::kAllRandomFamilies, n, rng);
  if (allow_offset && submod::coin(rng, 0.3)) {
    f = submod::ZooFunction(n, f.family(), submod::uniform_real(rng, -1.0, 1.0));
  }
  return f;
}

// Integral weights in {-2, ..., 2}; ties make the tolerance paths matter.
inline std::vector<double> lattice_point(int n, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = submod::uniform_int(rng, -2, 2);
  return x;
}

}  // namespace testing_util
