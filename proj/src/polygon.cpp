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

#include "polyattain/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyattain {

Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
}

const Point& Polygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(v_.size());
  return v_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

bool co_contains(std::span<const Point> outer, std::span<const Point> inner) {
  const std::vector<Point> h = convex_hull(outer);
  if (h.empty()) return inner.empty();
  for (const Point& q : inner) {
    if (h.size() == 1) {
      if (q != h[0]) return false;
    } else if (h.size() == 2) {
      if (!segment_contains(h[0], h[1], q)) return false;
    } else {
      for (std::size_t k = 0; k < h.size(); ++k)
        if (orient(h[k], h[(k + 1) % h.size()], q) < 0) return false;
    }
  }
  return true;
}

bool is_set_convex(const Polygon& p) { return convex_hull(p.vertices()).size() == p.size(); }

bool is_convex_ccw(const Polygon& p) {
  const std::vector<Point> h = convex_hull(p.vertices());
  const std::size_t n = p.size();
  if (h.size() != n) return false;
  const auto start = std::find(h.begin(), h.end(), p[0]) - h.begin();
  for (std::size_t k = 0; k < n; ++k)
    if (p[k] != h[(start + k) % n]) return false;
  return true;
}

bool collinear(std::span<const Point> pts) { return convex_hull(pts).size() <= 2; }

std::optional<Canonical> canonicalize_ccw(const Polygon& p) {
  const std::vector<Point> h = convex_hull(p.vertices());
  const std::size_t n = p.size();
  if (h.size() != n) return std::nullopt;
  const auto start = static_cast<std::size_t>(std::find(h.begin(), h.end(), p[0]) - h.begin());
  std::vector<Point> verts;
  std::vector<std::size_t> sigma;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& q = h[(start + k) % n];
    verts.push_back(q);
    sigma.push_back(static_cast<std::size_t>(
        std::find(p.vertices().begin(), p.vertices().end(), q) - p.vertices().begin()));
  }
  return Canonical{Polygon(std::move(verts)), std::move(sigma)};
}

Rat area(const Polygon& p) {
  Rat twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p[i], p.vertex(i + 1));
  return twice / 2;
}

std::ostream& operator<<(std::ostream& os, const BoundaryPoint& b) {
  return os << (b.edge + 1) << ':' << to_string(b.t);
}

Boundary::Boundary(Polygon p) : p_(std::move(p)) {
  if (!is_convex_ccw(p_)) throw std::invalid_argument("boundary polygon must be convex CCW");
}

BoundaryPoint Boundary::at(std::size_t edge, const Rat& t) const {
  if (edge >= size()) throw std::out_of_range("edge index out of range");
  if (t < 0 || t > 1) throw std::out_of_range("edge parameter outside [0,1]");
  if (t == 1) return corner(edge + 1);
  return {edge, t};
}

Point Boundary::realize(const BoundaryPoint& b) const {
  if (b.t == 0) return p_[b.edge];
  return lerp(p_[b.edge], p_.vertex(static_cast<std::ptrdiff_t>(b.edge) + 1), b.t);
}

bool Boundary::edge_contains(std::size_t i, const Point& q) const {
  return segment_contains(p_[i], p_.vertex(static_cast<std::ptrdiff_t>(i) + 1), q);
}

std::optional<BoundaryPoint> Boundary::locate(const Point& q) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const Point& a = p_[i];
    const Point& b = p_.vertex(static_cast<std::ptrdiff_t>(i) + 1);
    if (q == b || !segment_contains(a, b, q)) continue;
    return BoundaryPoint{i, line_param(a, b, q)};
  }
  return std::nullopt;
}

std::pair<std::size_t, const Rat*> Boundary::key(const BoundaryPoint& anchor,
                                                 const BoundaryPoint& b) const {
  std::size_t off = (b.edge + size() - anchor.edge) % size();
  if (off == 0 && b.t < anchor.t) off = size();
  return {off, &b.t};
}

std::strong_ordering Boundary::arc_cmp(const BoundaryPoint& anchor, const BoundaryPoint& a,
                                       const BoundaryPoint& b) const {
  const auto ka = key(anchor, a), kb = key(anchor, b);
  if (ka.first != kb.first) return ka.first <=> kb.first;
  if (*ka.second == *kb.second) return std::strong_ordering::equal;
  return *ka.second < *kb.second ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool Boundary::in_arc(const BoundaryPoint& x, const BoundaryPoint& a, const BoundaryPoint& b,
                      bool closed_left, bool closed_right) const {
  if (a == b) return x == a && closed_left && closed_right;
  if (x == a) return closed_left;
  if (x == b) return closed_right;
  return arc_cmp(a, x, b) == std::strong_ordering::less;
}

BoundaryPoint ray_polygon_exit(const Ray& r, const Boundary& boundary) {
  const Polygon& p = boundary.polygon();
  const std::size_t n = p.size();
  std::optional<Rat> best;
  BoundaryPoint best_bp;
  auto offer = [&](const Rat& u, std::size_t edge, const Rat& s) {
    if (u < 0 || (best && u <= *best)) return;
    best = u;
    best_bp = boundary.at(edge, s);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point e = p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - a;
    const Point w = a - r.origin;
    const Rat den = cross(r.dir, e);
    if (den != 0) {
      const Rat s = cross(w, r.dir) / den;
      if (s < 0 || s > 1) continue;
      offer(cross(w, e) / den, i, s);
    } else if (cross(w, r.dir) == 0) {
      // Collinear edge: its endpoints are the candidates.
      const Rat dd = dot(r.dir, r.dir);
      offer(dot(w, r.dir) / dd, i, Rat(0));
      offer(dot(w + e, r.dir) / dd, i, Rat(1));
    }
  }
  if (!best) throw std::domain_error("ray does not meet the boundary");
  return best_bp;
}

}  // namespace polyattain
