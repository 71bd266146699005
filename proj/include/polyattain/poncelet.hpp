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

#include <vector>

#include "polyattain/polygon.hpp"

namespace polyattain {

/// Travel direction along the outer boundary.
enum class Turn { Ccw, Cw };

/// A tangent ray from a boundary point x to the inner hull and the point
/// where the map sends x.
struct TangentEval {
  enum class Case { Interior, Boundary };

  Ray ray;
  std::vector<Point> pivots;  // inner hull vertices on the open ray, nearest first
  Case kind;
  BoundaryPoint image;

  const Point& pivot() const { return pivots.back(); }
};

/// The tangent-and-exit map of an inner polygon inside a convex CCW outer
/// polygon, and its clockwise twin.
class PonceletMap {
 public:
  /// Throws std::invalid_argument when inner is not contained in outer or
  /// all inner vertices are collinear.
  PonceletMap(Boundary outer, Polygon inner);

  const Boundary& outer() const { return outer_; }
  const Polygon& inner() const { return inner_; }
  const std::vector<Point>& inner_hull() const { return hull_; }
  /// Every inner vertex lies off the outer boundary.
  bool inner_interior() const { return interior_; }

  /// Right tangent (Ccw) or left tangent (Cw).
  TangentEval tangent(const BoundaryPoint& x, Turn turn = Turn::Ccw) const;
  BoundaryPoint eval(const BoundaryPoint& x, Turn turn = Turn::Ccw) const {
    return tangent(x, turn).image;
  }
  BoundaryPoint operator()(const BoundaryPoint& x) const { return eval(x); }

 private:
  Point find_pivot(const Point& x, int side) const;

  Boundary outer_;
  Polygon inner_;
  std::vector<Point> hull_;
  bool interior_ = true;
};

/// Convenience wrappers that build the map for a single evaluation.
TangentEval right_tangent(const Boundary& outer, const Polygon& inner, const Point& x);
BoundaryPoint poncelet(const Boundary& outer, const Polygon& inner, const BoundaryPoint& x);
BoundaryPoint poncelet_cw(const Boundary& outer, const Polygon& inner, const BoundaryPoint& x);

struct JunctureSets {
  // Each list is sorted counterclockwise from the first outer vertex and
  // free of duplicates.
  std::vector<BoundaryPoint> gamma1, gamma2, gamma;
  bool gamma2_computed = false;  // only when the inner polygon is interior
};

JunctureSets gamma_sets(const PonceletMap& map);

/// The points of the degeneracy test set: outer vertices by index, then
/// the first juncture set in boundary order, duplicates removed.
std::vector<BoundaryPoint> degeneracy_test_points(const PonceletMap& map);

struct BlcResult {
  Turn turn = Turn::Ccw;
  std::vector<BoundaryPoint> points;  // x_1..x_l
  std::vector<Point> pivots;          // p(x_k) for k = 1..l
  BoundaryPoint stop_image;           // image of x_l

  std::size_t l() const { return points.size(); }
};

/// Broken line construction: iterate the map from x while each image stays
/// in the open arc from the current point back to x (counterclockwise, or
/// clockwise for Turn::Cw).
BlcResult blc(const PonceletMap& map, const BoundaryPoint& x, Turn turn = Turn::Ccw);

}  // namespace polyattain
