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

// Umbrella header.

#pragma once

#include "submod/bounds.hpp"
#include "submod/brute_force.hpp"
#include "submod/error.hpp"
#include "submod/instance.hpp"
#include "submod/optimize.hpp"
#include "submod/polyhedra.hpp"
#include "submod/random.hpp"
#include "submod/set_function.hpp"
#include "submod/subset.hpp"
#include "submod/sweep.hpp"
#include "submod/validate.hpp"
#include "submod/zoo.hpp"
