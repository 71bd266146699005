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

#include "polyattain/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyattain {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_string(p.x) << ',' << to_string(p.y) << ')';
}

int orient(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a).sign();
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain; strict turns only, so collinear points vanish.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 1) hull.push_back(pts.back());  // all collinear
  return hull;
}

bool segment_contains(const Point& a, const Point& b, const Point& q) {
  if (orient(a, b, q) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

Rat line_param(const Point& a, const Point& b, const Point& q) {
  const Point d = b - a;
  return d.x != 0 ? (q.x - a.x) / d.x : (q.y - a.y) / d.y;
}

namespace {

Point primitive(const Point& d) {
  // Scale by the lcm of denominators, then divide by the gcd of numerators.
  const Int l = lcm(denominator(d.x), denominator(d.y));
  const Int a = numerator(d.x) * (l / denominator(d.x));
  const Int b = numerator(d.y) * (l / denominator(d.y));
  const Int g = gcd(a, b);
  return {Rat(a / g), Rat(b / g)};
}

}  // namespace

DirectedLine::DirectedLine(Point base, Point dir) : base_(std::move(base)) {
  if (dir.x == 0 && dir.y == 0) throw std::invalid_argument("zero direction");
  dir_ = primitive(dir);
}

bool DirectedLine::contains(const Point& q) const { return cross(dir_, q - base_) == 0; }

Rat DirectedLine::param(const Point& q) const {
  return dir_.x != 0 ? (q.x - base_.x) / dir_.x : (q.y - base_.y) / dir_.y;
}

bool operator==(const DirectedLine& a, const DirectedLine& b) {
  return a.contains(b.base_) && a.dir_ == b.dir_;
}

Ray::Ray(Point o, Point d) : origin(std::move(o)), dir(std::move(d)) {
  if (dir.x == 0 && dir.y == 0) throw std::invalid_argument("zero ray direction");
}

Perspectivity::Perspectivity(DirectedLine source, DirectedLine target, Point center)
    : source_(std::move(source)), target_(std::move(target)), center_(std::move(center)) {
  if (source_.contains(center_) || target_.contains(center_))
    throw std::invalid_argument("perspectivity center lies on a line");
  if (source_.contains(target_.base()) && cross(source_.dir(), target_.dir()) == 0)
    throw std::invalid_argument("perspectivity lines coincide");
}

PerspImage persp_eval(const Perspectivity& p, const Point& q) {
  if (!p.source().contains(q)) throw std::invalid_argument("point not on source line");
  const Point v = q - p.center();
  const Point& b2 = p.target().base();
  const Point& d2 = p.target().dir();
  const Rat den = cross(d2, v);
  if (den == 0) return Pole{};
  return b2 + (cross(p.center() - b2, v) / den) * d2;
}

PerspClass persp_classify(const Perspectivity& p) {
  // s(t) = (A t + B) / (C t + D) maps source parameter t to target parameter s.
  const Point& o = p.center();
  const Point& b1 = p.source().base();
  const Point& d1 = p.source().dir();
  const Point& b2 = p.target().base();
  const Point& d2 = p.target().dir();
  const Point w0 = b1 - o;
  const Rat A = cross(o - b2, d1), B = cross(o - b2, w0);
  const Rat C = cross(d2, d1), D = cross(d2, w0);
  if (C == 0) return {PerspClass::Kind::Affine, std::nullopt};
  const Point pole = p.source().at(-D / C);
  const auto kind = (A * D - B * C).sign() > 0 ? PerspClass::Kind::OrientationPreserving
                                               : PerspClass::Kind::OrientationReversing;
  return {kind, pole};
}

}  // namespace polyattain
