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

// Shared fixtures and structural checks for the unit and acceptance tests.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "polyattain/attainability.hpp"
#include "polyattain/generate.hpp"
#include "polyattain/moves.hpp"
#include "polyattain/poncelet.hpp"

namespace fixture {

using namespace polyattain;

inline Point pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

inline Polygon square() { return {pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")}; }
inline Polygon half_square() {
  return {pt("1/4", "1/4"), pt("3/4", "1/4"), pt("3/4", "3/4"), pt("1/4", "3/4")};
}
// Half-square with its first vertex pushed out to the bottom edge.
inline Polygon pbar() {
  return {pt("1/4", "0"), pt("3/4", "1/4"), pt("3/4", "3/4"), pt("1/4", "3/4")};
}
inline Polygon corner_quad() {
  return {pt("1/4", "1/4"), pt("1/2", "1/4"), pt("1/2", "1/2"), pt("1/4", "1/2")};
}

inline std::vector<Point> realize_all(const Boundary& b, const std::vector<BoundaryPoint>& xs) {
  std::vector<Point> out;
  for (const auto& x : xs) out.push_back(b.realize(x));
  return out;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string str(const std::vector<Point>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

// Closed and half-open arcs in oracle terms; a and b must differ.
inline bool closed_arc(const oracle::ArcOrder& o, const Point& q, const Point& a, const Point& b) {
  return q == a || q == b || o.in_open_arc(q, a, b);
}
inline bool left_closed_arc(const oracle::ArcOrder& o, const Point& q, const Point& a, const Point& b) {
  return q == a || o.in_open_arc(q, a, b);
}

// Every structural clause of a ccw broken line; returns a failure description.
inline std::optional<std::string> check_broken_line(const PonceletMap& map, const BlcResult& r) {
  const Boundary& b = map.outer();
  const std::size_t n = b.size();
  const std::vector<Point> P(b.polygon().vertices().begin(), b.polygon().vertices().end());
  const oracle::ArcOrder arcs(P);
  const std::vector<Point> x = realize_all(b, r.points);
  const std::size_t l = x.size();
  auto fail = [&](const std::string& what) {
    return std::optional<std::string>(what + " for run " + str(x));
  };

  // Inscribed, counterclockwise from x_1, and at most n+1 points.
  if (l < 3 || l > n + 1) return fail("length out of range");
  for (const Point& q : x)
    if (!arcs.edge_of(q)) return fail("point off the boundary");
  for (std::size_t k = 1; k + 1 < l; ++k)
    if (!(arcs.travel(x[0], x[k]) < arcs.travel(x[0], x[k + 1]))) return fail("order broken");
  if (x[1] == x[0] || x[l - 1] == x[0]) return fail("repeated start");

  // One point per half-open edge, except the first edge may hold x_1 and x_l.
  std::vector<int> count(n, 0);
  for (const Point& q : x) ++count[*arcs.edge_of(q)];
  const std::size_t e1 = *arcs.edge_of(x[0]);
  for (std::size_t e = 0; e < n; ++e)
    if (count[e] > (e == e1 && *arcs.edge_of(x[l - 1]) == e1 ? 2 : 1)) return fail("edge multiplicity");

  // Convexity, with the collinear-start exception, and containment.
  std::vector<Point> body = x;
  if (oracle::det3(x[l - 1], x[0], x[1]) == 0) {
    if (x[1] != P[(e1 + 1) % n] || *arcs.edge_of(x[l - 1]) != e1) return fail("unexpected collinear start");
    body.erase(body.begin());
  }
  for (std::size_t k = 0; k < body.size(); ++k)
    for (std::size_t j = 0; j < body.size(); ++j) {
      const Point& a = body[k];
      const Point& c = body[(k + 1) % body.size()];
      if (j == k || j == (k + 1) % body.size()) continue;
      if (oracle::det3(a, c, body[j]) <= 0) return fail("not strictly convex");
    }
  for (const Point& u : map.inner().vertices())
    for (std::size_t k = 0; k < body.size(); ++k)
      if (oracle::det3(body[k], body[(k + 1) % body.size()], u) < 0) return fail("inner polygon escapes");

  // Pivots sit on the half-open chords (x_k, x_{k+1}].
  for (std::size_t k = 0; k + 1 < l; ++k) {
    const Point& p = r.pivots[k];
    if (p == x[k] || !oracle::on_segment(x[k], x[k + 1], p)) return fail("pivot off chord");
  }
  return std::nullopt;
}

}  // namespace fixture
