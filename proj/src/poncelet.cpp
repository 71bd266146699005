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

#include "polyattain/poncelet.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyattain {

PonceletMap::PonceletMap(Boundary outer, Polygon inner)
    : outer_(std::move(outer)), inner_(std::move(inner)), hull_(convex_hull(inner_.vertices())) {
  if (!co_contains(outer_.polygon(), inner_))
    throw std::invalid_argument("inner polygon not contained in outer polygon");
  if (hull_.size() < 3) throw std::invalid_argument("inner polygon is collinear");
  for (const Point& q : inner_.vertices())
    if (outer_.on_boundary(q)) interior_ = false;
}

Point PonceletMap::find_pivot(const Point& x, int side) const {
  // Gift-wrapping scan; a brute-force pass backs it up if the scan's
  // candidate fails the half-plane check (the hull may wrap a half-turn).
  const Point* c = nullptr;
  for (const Point& w : hull_) {
    if (w == x) continue;
    if (!c || orient(x, *c, w) * side < 0) c = &w;
  }
  auto valid = [&](const Point& cand) {
    return std::all_of(hull_.begin(), hull_.end(), [&](const Point& w) {
      return w == x || orient(x, cand, w) * side >= 0;
    });
  };
  if (valid(*c)) return *c;
  for (const Point& cand : hull_)
    if (cand != x && valid(cand)) return cand;
  throw std::logic_error("no tangent ray from boundary point");
}

TangentEval PonceletMap::tangent(const BoundaryPoint& x, Turn turn) const {
  const Point xp = outer_.realize(x);
  const Point c = find_pivot(xp, turn == Turn::Ccw ? 1 : -1);
  const Point dc = c - xp;

  std::vector<std::pair<Rat, Point>> on_ray;
  for (const Point& w : hull_)
    if (w != xp && orient(xp, c, w) == 0) {
      Rat along = dot(w - xp, dc);
      if (along > 0) on_ray.emplace_back(std::move(along), w);
    }
  std::sort(on_ray.begin(), on_ray.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Point> pivots;
  for (auto& [along, w] : on_ray) pivots.push_back(std::move(w));

  const Polygon& p = outer_.polygon();
  const std::size_t n = p.size();
  Ray ray(xp, pivots.back() - xp);
  // The half-open edge that x leaves along: [p_i, p_{i+1}) going
  // counterclockwise, (p_e, p_{e+1}] going clockwise.
  const std::size_t e = (turn == Turn::Ccw || x.t != 0) ? x.edge : (x.edge + n - 1) % n;
  const Point edge = p.vertex(static_cast<std::ptrdiff_t>(e) + 1) - p[e];
  if (cross(edge, ray.dir) == 0) {
    BoundaryPoint img = outer_.corner(turn == Turn::Ccw ? e + 1 : e);
    return {std::move(ray), std::move(pivots), TangentEval::Case::Boundary, std::move(img)};
  }
  BoundaryPoint img = ray_polygon_exit(ray, outer_);
  return {std::move(ray), std::move(pivots), TangentEval::Case::Interior, std::move(img)};
}

TangentEval right_tangent(const Boundary& outer, const Polygon& inner, const Point& x) {
  const auto bx = outer.locate(x);
  if (!bx) throw std::invalid_argument("point not on the outer boundary");
  return PonceletMap(outer, inner).tangent(*bx, Turn::Ccw);
}

BoundaryPoint poncelet(const Boundary& outer, const Polygon& inner, const BoundaryPoint& x) {
  return PonceletMap(outer, inner).eval(x, Turn::Ccw);
}

BoundaryPoint poncelet_cw(const Boundary& outer, const Polygon& inner, const BoundaryPoint& x) {
  return PonceletMap(outer, inner).eval(x, Turn::Cw);
}

namespace {

void sort_unique(const Boundary& b, std::vector<BoundaryPoint>& v) {
  const BoundaryPoint origin = b.corner(0);
  std::sort(v.begin(), v.end(), [&](const BoundaryPoint& l, const BoundaryPoint& r) {
    return b.arc_cmp(origin, l, r) == std::strong_ordering::less;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

JunctureSets gamma_sets(const PonceletMap& map) {
  const Boundary& outer = map.outer();
  const std::vector<Point>& h = map.inner_hull();
  JunctureSets js;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Point& v = h[k];
    const Point& w = h[(k + 1) % h.size()];
    bool same_edge = false;
    for (std::size_t i = 0; i < outer.size() && !same_edge; ++i)
      same_edge = outer.edge_contains(i, v) && outer.edge_contains(i, w);
    if (same_edge) continue;
    BoundaryPoint x = ray_polygon_exit(Ray(w, v - w), outer);
    if (map.tangent(x).kind == TangentEval::Case::Interior) js.gamma1.push_back(std::move(x));
  }
  sort_unique(outer, js.gamma1);

  if (map.inner_interior()) {
    js.gamma2_computed = true;
    for (std::size_t k = 0; k < outer.size(); ++k)
      js.gamma2.push_back(map.eval(outer.corner(k), Turn::Cw));
    sort_unique(outer, js.gamma2);
  }

  for (std::size_t k = 0; k < outer.size(); ++k) js.gamma.push_back(outer.corner(k));
  js.gamma.insert(js.gamma.end(), js.gamma1.begin(), js.gamma1.end());
  js.gamma.insert(js.gamma.end(), js.gamma2.begin(), js.gamma2.end());
  sort_unique(outer, js.gamma);
  return js;
}

std::vector<BoundaryPoint> degeneracy_test_points(const PonceletMap& map) {
  const Boundary& outer = map.outer();
  std::vector<BoundaryPoint> t;
  for (std::size_t k = 0; k < outer.size(); ++k) t.push_back(outer.corner(k));
  for (const BoundaryPoint& g : gamma_sets(map).gamma1)
    if (!outer.is_vertex(g)) t.push_back(g);
  return t;
}

BlcResult blc(const PonceletMap& map, const BoundaryPoint& x, Turn turn) {
  const Boundary& outer = map.outer();
  BlcResult r;
  r.turn = turn;
  r.points.push_back(x);
  for (;;) {
    const BoundaryPoint& cur = r.points.back();
    TangentEval te = map.tangent(cur, turn);
    r.pivots.push_back(te.pivot());
    const bool more = r.points.size() == 1 ||
                      (turn == Turn::Ccw ? outer.in_open_arc(te.image, cur, x)
                                         : outer.in_open_arc(te.image, x, cur));
    if (!more) {
      r.stop_image = std::move(te.image);
      return r;
    }
    if (r.points.size() > outer.size())
      throw std::logic_error("broken line exceeded n+1 points");
    r.points.push_back(std::move(te.image));
  }
}

}  // namespace polyattain
