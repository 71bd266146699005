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

#include "polyattain/generate.hpp"

#include <algorithm>

namespace polyattain {

std::optional<GenMode> parse_gen_mode(const std::string& s) {
  if (s == "random") return GenMode::Random;
  if (s == "scripted") return GenMode::Scripted;
  if (s == "degenerate") return GenMode::Degenerate;
  return std::nullopt;
}

std::uint64_t Generator::uniform(std::uint64_t lo, std::uint64_t hi) {
  // Plain modulo keeps the stream identical across standard libraries; the
  // bias is irrelevant at these ranges.
  return lo + rng_() % (hi - lo + 1);
}

Rat Generator::unit_rational(std::uint64_t max_den) {
  const std::uint64_t d = uniform(1, max_den);
  return Rat(Int(uniform(0, d)), Int(d));
}

Polygon Generator::convex_polygon(std::size_t n) {
  const auto r = static_cast<std::int64_t>(4 * n + 4);
  for (std::size_t count = 3 * n;; count += n) {
    std::vector<Point> pts;
    while (pts.size() < count) {
      const auto x = static_cast<std::int64_t>(uniform(0, 2 * r)) - r;
      const auto y = static_cast<std::int64_t>(uniform(0, 2 * r)) - r;
      if (x * x + y * y <= r * r) pts.push_back({Rat(x), Rat(y)});
    }
    std::vector<Point> h = convex_hull(pts);
    if (h.size() < n) continue;
    // Any ordered subset of hull vertices is again convex CCW.
    while (h.size() > n) h.erase(h.begin() + static_cast<std::ptrdiff_t>(uniform(0, h.size() - 1)));
    return Polygon(std::move(h));
  }
}

Point Generator::combination(std::span<const Point> verts, std::uint64_t lo, std::uint64_t hi,
                             std::size_t favored, std::uint64_t bonus) {
  std::vector<std::uint64_t> w(verts.size());
  std::uint64_t total = 0;
  while (total == 0) {
    total = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      total += (w[k] = uniform(lo, hi) + (k == favored ? uniform(0, bonus) : 0));
  }
  Point p{Rat(0), Rat(0)};
  for (std::size_t k = 0; k < verts.size(); ++k)
    p = p + Rat(Int(w[k]), Int(total)) * verts[k];
  return p;
}

// Vertex k leans toward p_k. Unbiased combinations cluster near the centroid,
// which makes almost every instance degenerate once n exceeds 4.
Polygon Generator::interior_polygon(const Polygon& P) {
  std::vector<Point> v;
  for (std::size_t k = 0; k < P.size(); ++k) v.push_back(combination(P.vertices(), 1, 3, k, 10 * P.size()));
  return Polygon(std::move(v));
}

Polygon Generator::inner_polygon(const Polygon& P) {
  std::vector<Point> v;
  for (std::size_t k = 0; k < P.size(); ++k) v.push_back(combination(P.vertices(), 0, 3, k, 10 * P.size()));
  return Polygon(std::move(v));
}

MoveScript Generator::pullin_script(const Polygon& P, std::size_t max_len) {
  MoveScript s{P, {}};
  const std::size_t len = uniform(1, max_len);
  const std::size_t n = P.size();
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i = uniform(0, n - 1);
    const std::size_t j = (i + uniform(1, n - 1)) % n;
    s.moves.push_back({i, j, unit_rational(6)});
  }
  return s;
}

BoundaryPoint Generator::boundary_point(const Boundary& b, std::uint64_t max_den) {
  const std::size_t e = uniform(0, b.size() - 1);
  const std::uint64_t d = uniform(1, max_den);
  return b.at(e, Rat(Int(uniform(0, d - 1)), Int(d)));
}

Instance generate(std::size_t n, std::uint64_t seed, GenMode mode) {
  Generator g(seed);
  Polygon P = g.convex_polygon(n);
  Polygon Pp = P;
  std::string name;
  switch (mode) {
    case GenMode::Random:
      Pp = g.inner_polygon(P);
      name = "random";
      break;
    case GenMode::Scripted:
      Pp = apply_script(g.pullin_script(P, 10));
      name = "scripted";
      break;
    case GenMode::Degenerate: {
      std::vector<Point> sub(P.vertices().begin(), P.vertices().end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(g.uniform(0, n - 1)));
      std::vector<Point> v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(g.combination(sub, 0, 3));
      Pp = Polygon(std::move(v));
      name = "degenerate";
      break;
    }
  }
  return {std::move(P), std::move(Pp), name + "-n" + std::to_string(n) + "-s" + std::to_string(seed),
          seed};
}

}  // namespace polyattain
