// Copyright 2026 The polyattain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyattain/moves.hpp"
#include "polyattain/poncelet.hpp"

namespace polyattain {

enum class BoundClass { DegenerateLt5n, Threshold2nMinus1, Vestibule2n, DirectShort };

const char* to_string(BoundClass b);
/// True when a script of the given length on n vertices fits the class.
bool within_bound(BoundClass b, std::size_t n, std::size_t length);

struct PlanOutcome {
  MoveScript script;
  BoundClass bound_class;
  std::optional<std::vector<Polygon>> intermediate_polygons;
};

/// Every polygon visited by the script, start and end included.
std::vector<Polygon> trace(const MoveScript& s);

/// Script from P to Pp through push-outs toward a smaller interpolant.
/// P may be in any order. Throws std::invalid_argument if the witness does
/// not certify degeneracy.
PlanOutcome plan_degenerate(const Polygon& P, const Polygon& Pp, std::span<const Point> witness);

/// Script from P (convex CCW) to Pp whose vertex i lies on the boundary,
/// given the certifying broken line from Pp[i]. Throws
/// std::invalid_argument when the certificate does not check out.
PlanOutcome plan_threshold(const Polygon& P, const Polygon& Pp, std::size_t i, const BlcResult& blc);

/// The threshold script for the pushed-out polygon followed by the inverse
/// of the push-out.
PlanOutcome plan_vestibule(const Polygon& P, const Polygon& Pp, const PushOut& pushout,
                           const PlanOutcome& threshold_plan);

}  // namespace polyattain
