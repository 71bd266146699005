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

#include "polyattain/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyattain {

const char* to_string(DegeneracyVerdict::Reason r) {
  switch (r) {
    case DegeneracyVerdict::Reason::NotSetConvexOuter: return "NotSetConvexOuter";
    case DegeneracyVerdict::Reason::CollinearInner: return "CollinearInner";
    case DegeneracyVerdict::Reason::BlcEarlyStop: return "BlcEarlyStop";
    case DegeneracyVerdict::Reason::NoGoodTestPoint: return "NoGoodTestPoint";
  }
  return "?";
}

bool certifies_degeneracy(const Polygon& P, const Polygon& Pp, std::span<const Point> witness) {
  return !witness.empty() && witness.size() < P.size() && co_contains(P.vertices(), witness) &&
         co_contains(witness, Pp.vertices());
}

DegeneracyVerdict is_degenerate(const Polygon& P, const Polygon& Pp) {
  using Reason = DegeneracyVerdict::Reason;
  if (P.size() != Pp.size()) throw std::invalid_argument("vertex count mismatch");
  if (!co_contains(P, Pp)) throw std::invalid_argument("containment violated");
  const std::size_t n = P.size();

  if (!is_set_convex(P))
    return {true, convex_hull(P.vertices()), Reason::NotSetConvexOuter, std::nullopt};

  const std::vector<Point> inner_hull = convex_hull(Pp.vertices());
  if (inner_hull.size() <= 2) {
    std::vector<Point> w = inner_hull;
    if (n >= 4) {
      // The segment plus the first vertex of P off its line.
      for (const Point& p : P.vertices()) {
        const bool on_line = w.size() == 1 ? p == w[0] : orient(w[0], w[1], p) == 0;
        if (!on_line) {
          w.push_back(p);
          break;
        }
      }
      w = convex_hull(w);
    }
    return {true, std::move(w), Reason::CollinearInner, std::nullopt};
  }
  if (n == 3) return {false, std::nullopt, Reason::NoGoodTestPoint, std::nullopt};

  const PonceletMap map(Boundary(canonicalize_ccw(P)->polygon), Pp);
  for (const BoundaryPoint& x : degeneracy_test_points(map)) {
    const BlcResult r = blc(map, x);
    if (r.l() < n) {
      std::vector<Point> w;
      for (const BoundaryPoint& b : r.points) w.push_back(map.outer().realize(b));
      return {true, std::move(w), Reason::BlcEarlyStop, map.outer().realize(x)};
    }
  }
  return {false, std::nullopt, Reason::NoGoodTestPoint, std::nullopt};
}

namespace {

std::optional<std::size_t> stray_edge(const Boundary& P, const Point& q) {
  const auto b = P.locate(q);
  if (!b || P.is_vertex(*b)) return std::nullopt;
  return b->edge;
}

}  // namespace

bool is_maximal_degenerate(std::span<const Point> q, const Boundary& P) {
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto b = P.locate(q[k]);
    if (!b) return false;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j == k) continue;
      if (P.is_vertex(*b) ? q[j] == q[k] : P.edge_contains(b->edge, q[j])) return false;
    }
  }
  return true;
}

std::vector<Point> maximal_degenerate_extend(std::span<const Point> q, const Boundary& P) {
  const std::size_t n = P.size();
  if (q.empty() || q.size() >= n) throw std::invalid_argument("need 1 <= m < n points");
  if (!co_contains(P.polygon().vertices(), q))
    throw std::invalid_argument("points not contained in P");

  std::vector<Point> w(q.begin(), q.end());
  w.resize(n - 1, q[0]);

  auto push_onto_boundary = [&](std::size_t k, const Point& from) {
    const Point dir = w[k] == from ? P.vertex(0) - from : w[k] - from;
    w[k] = P.realize(ray_polygon_exit(Ray(from, dir), P));
  };
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!P.on_boundary(w[k])) push_onto_boundary(k, w[0]);
  if (!P.on_boundary(w[0])) push_onto_boundary(0, w[1]);

  for (;;) {
    bool moved = false;
    // A stray point sharing its edge goes to the far endpoint.
    for (std::size_t s = 0; s < w.size() && !moved; ++s) {
      const auto e = stray_edge(P, w[s]);
      if (!e) continue;
      const Point& a = P.vertex(static_cast<std::ptrdiff_t>(*e));
      const Point& b = P.vertex(static_cast<std::ptrdiff_t>(*e) + 1);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j == s || !P.edge_contains(*e, w[j])) continue;
        w[s] = (w[j] == w[s] || segment_contains(w[j], b, w[s])) ? b : a;
        moved = true;
        break;
      }
    }
    // A double point on a vertex splits to an unoccupied vertex.
    for (std::size_t k = 0; k < w.size() && !moved; ++k) {
      if (stray_edge(P, w[k])) continue;
      for (std::size_t j = k + 1; j < w.size() && !moved; ++j) {
        if (w[j] != w[k]) continue;
        for (std::size_t v = 0; v < n; ++v) {
          const Point& pv = P.vertex(static_cast<std::ptrdiff_t>(v));
          if (std::find(w.begin(), w.end(), pv) == w.end()) {
            w[j] = pv;
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) break;
  }
  return w;
}

}  // namespace polyattain
