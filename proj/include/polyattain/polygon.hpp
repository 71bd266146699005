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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyattain/geometry.hpp"

namespace polyattain {

/// Ordered n-tuple of points, n >= 3, duplicates allowed. Indices are
/// 0-based in code and taken modulo n by vertex().
class Polygon {
 public:
  /// Throws std::invalid_argument if fewer than 3 vertices.
  explicit Polygon(std::vector<Point> vertices);
  Polygon(std::initializer_list<Point> vertices)
      : Polygon(std::vector<Point>(vertices)) {}

  std::size_t size() const { return v_.size(); }
  const Point& operator[](std::size_t i) const { return v_[i]; }
  Point& operator[](std::size_t i) { return v_[i]; }
  const Point& vertex(std::ptrdiff_t i) const;
  std::span<const Point> vertices() const { return v_; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> v_;
};

std::ostream& operator<<(std::ostream& os, const Polygon& p);

/// Every point of inner lies in co(outer). Degenerate hulls (a point or a
/// segment) are handled.
bool co_contains(std::span<const Point> outer, std::span<const Point> inner);
inline bool co_contains(const Polygon& outer, const Polygon& inner) {
  return co_contains(outer.vertices(), inner.vertices());
}

/// All vertices are distinct extreme points of the hull.
bool is_set_convex(const Polygon& p);
/// Set-convex and the vertices follow the counterclockwise boundary order.
bool is_convex_ccw(const Polygon& p);
/// All vertices on one line (includes the all-equal case).
bool collinear(std::span<const Point> pts);
inline bool collinear(const Polygon& p) { return collinear(p.vertices()); }

struct Canonical {
  Polygon polygon;                  // convex CCW, starts at the input's first vertex
  std::vector<std::size_t> sigma;   // polygon[k] == input[sigma[k]]
};
/// Re-indexes a set-convex polygon into counterclockwise order; nullopt when
/// the input is not set-convex.
std::optional<Canonical> canonicalize_ccw(const Polygon& p);

/// Shoelace area; positive for counterclockwise input.
Rat area(const Polygon& p);

/// (1-t) p_edge + t p_{edge+1} with t in [0,1). A vertex is always (i, 0).
struct BoundaryPoint {
  std::size_t edge = 0;
  Rat t;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const BoundaryPoint& b);

/// Boundary coordinates of a convex counterclockwise polygon.
class Boundary {
 public:
  /// Throws std::invalid_argument unless p is convex CCW.
  explicit Boundary(Polygon p);

  const Polygon& polygon() const { return p_; }
  std::size_t size() const { return p_.size(); }
  const Point& vertex(std::ptrdiff_t i) const { return p_.vertex(i); }

  /// Canonical boundary point; t == 1 rolls over to the next vertex.
  /// Throws std::out_of_range for t outside [0,1] or a bad edge.
  BoundaryPoint at(std::size_t edge, const Rat& t) const;
  BoundaryPoint corner(std::size_t i) const { return {i % size(), Rat(0)}; }
  Point realize(const BoundaryPoint& b) const;
  std::optional<BoundaryPoint> locate(const Point& q) const;
  bool on_boundary(const Point& q) const { return locate(q).has_value(); }
  /// q in the closed edge [p_i, p_{i+1}].
  bool edge_contains(std::size_t i, const Point& q) const;
  bool is_vertex(const BoundaryPoint& b) const { return b.t == 0; }

  /// Orders a and b by counterclockwise travel from the anchor; the anchor
  /// itself is the minimum.
  std::strong_ordering arc_cmp(const BoundaryPoint& anchor, const BoundaryPoint& a,
                               const BoundaryPoint& b) const;

  /// Membership of x in the counterclockwise arc from a to b with the given
  /// endpoint inclusion. arc[a,a] is {a}; arc(a,a) is empty.
  bool in_arc(const BoundaryPoint& x, const BoundaryPoint& a, const BoundaryPoint& b,
              bool closed_left, bool closed_right) const;
  bool in_open_arc(const BoundaryPoint& x, const BoundaryPoint& a,
                   const BoundaryPoint& b) const {
    return in_arc(x, a, b, false, false);
  }
  bool in_closed_arc(const BoundaryPoint& x, const BoundaryPoint& a,
                     const BoundaryPoint& b) const {
    return in_arc(x, a, b, true, true);
  }

 private:
  std::pair<std::size_t, const Rat*> key(const BoundaryPoint& anchor,
                                         const BoundaryPoint& b) const;
  Polygon p_;
};

/// Intersection of the ray with the boundary at maximal ray parameter.
/// Throws std::domain_error when the ray misses the boundary.
BoundaryPoint ray_polygon_exit(const Ray& r, const Boundary& boundary);

}  // namespace polyattain
