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
#include <vector>

#include "polyattain/poncelet.hpp"

namespace polyattain {

struct DegeneracyVerdict {
  enum class Reason { NotSetConvexOuter, CollinearInner, BlcEarlyStop, NoGoodTestPoint };

  bool degenerate = false;
  /// An interpolating point set with fewer than n points, Pp <= witness <= P.
  std::optional<std::vector<Point>> witness;
  Reason reason = Reason::NoGoodTestPoint;
  /// Start of the early-stopping broken line, for BlcEarlyStop.
  std::optional<Point> start;
};

const char* to_string(DegeneracyVerdict::Reason r);

/// Decides whether some polygon with fewer than n vertices fits between Pp
/// and P. Throws std::invalid_argument unless co(Pp) is inside co(P) and the
/// two have equal size.
DegeneracyVerdict is_degenerate(const Polygon& P, const Polygon& Pp);

/// The three checks every witness must pass.
bool certifies_degeneracy(const Polygon& P, const Polygon& Pp, std::span<const Point> witness);

/// Grows q (fewer than n points, inside P) into an (n-1)-point set inscribed
/// in P whose points singly occupy vertices of P or sit alone on an edge.
/// Throws std::invalid_argument on precondition violations.
std::vector<Point> maximal_degenerate_extend(std::span<const Point> q, const Boundary& P);

/// Each point singly occupies a vertex of P or is alone on its edge.
bool is_maximal_degenerate(std::span<const Point> q, const Boundary& P);

}  // namespace polyattain
