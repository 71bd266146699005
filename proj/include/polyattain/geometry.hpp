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
#include <optional>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "polyattain/rational.hpp"

namespace polyattain {

struct Point {
  Rat x, y;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic; used for canonical ordering, never for geometry.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
/// (1-t)a + tb
inline Point lerp(const Point& a, const Point& b, const Rat& t) { return a + t * (b - a); }

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Sign of the determinant |1 a; 1 b; 1 c|: +1 when c is strictly left of
/// the directed line from a to b, 0 when collinear, -1 when strictly right.
int orient(const Point& a, const Point& b, const Point& c);

/// Extreme points in counterclockwise order starting at the lexicographically
/// smallest one. Duplicates and collinear middle points are dropped, so a
/// point set returns 1 point and a segment 2 points.
std::vector<Point> convex_hull(std::span<const Point> points);

/// q in the closed segment [a, b].
bool segment_contains(const Point& a, const Point& b, const Point& q);

/// Parameter u with q = a + u (b - a), for q on the line through a != b.
Rat line_param(const Point& a, const Point& b, const Point& q);

class DirectedLine {
 public:
  /// Throws std::invalid_argument on a zero direction. The direction is
  /// rescaled to a primitive integer vector with the same orientation.
  DirectedLine(Point base, Point dir);
  static DirectedLine through(const Point& a, const Point& b) { return {a, b - a}; }

  const Point& base() const { return base_; }
  const Point& dir() const { return dir_; }
  bool contains(const Point& q) const;
  /// Affine parameter of a point on the line; monotone in the line order.
  Rat param(const Point& q) const;
  Point at(const Rat& t) const { return base_ + t * dir_; }

  /// Same point set and positively proportional direction.
  friend bool operator==(const DirectedLine& a, const DirectedLine& b);

 private:
  Point base_, dir_;
};

struct Ray {
  Point origin, dir;

  Ray(Point o, Point d);
  Point at(const Rat& u) const { return origin + u * dir; }
};

/// Map from the source line to the target line through a center.
class Perspectivity {
 public:
  /// Throws std::invalid_argument when the center lies on either line or
  /// the two lines coincide.
  Perspectivity(DirectedLine source, DirectedLine target, Point center);

  const DirectedLine& source() const { return source_; }
  const DirectedLine& target() const { return target_; }
  const Point& center() const { return center_; }

  /// Back-map target -> source through the same center.
  Perspectivity reversed() const { return {target_, source_, center_}; }

 private:
  DirectedLine source_, target_;
  Point center_;
};

/// The point of the source line whose image is undefined.
struct Pole {
  friend bool operator==(const Pole&, const Pole&) = default;
};

using PerspImage = std::variant<Point, Pole>;

/// Intersection of the line through center and q with the target line.
/// Throws std::invalid_argument if q is not on the source line.
PerspImage persp_eval(const Perspectivity& p, const Point& q);

struct PerspClass {
  enum class Kind { Affine, OrientationPreserving, OrientationReversing };
  Kind kind;
  std::optional<Point> pole;  // absent iff Affine
};

/// Classifies the fractional linear map t -> s between line parameters:
/// increasing away from the pole is orientation preserving.
PerspClass persp_classify(const Perspectivity& p);

}  // namespace polyattain
