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

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "polyattain/io.hpp"

namespace polyattain {

enum class GenMode { Random, Scripted, Degenerate };

std::optional<GenMode> parse_gen_mode(const std::string& s);

/// Seeded source of random instances; identical seeds give identical output.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive
  /// k/d with 1 <= d <= max_den and 0 <= k <= d.
  Rat unit_rational(std::uint64_t max_den);

  /// Convex CCW n-gon with small integer coordinates.
  Polygon convex_polygon(std::size_t n);
  /// Random convex combination of the chosen vertices with integer weights
  /// in [lo, hi] (not all zero); the favored vertex gets an extra weight in
  /// [0, bonus].
  Point combination(std::span<const Point> verts, std::uint64_t lo, std::uint64_t hi,
                    std::size_t favored = 0, std::uint64_t bonus = 0);
  /// Every vertex a combination with strictly positive weights, vertex k
  /// biased toward p_k.
  Polygon interior_polygon(const Polygon& P);
  /// As interior_polygon, but zero weights are allowed so vertices may touch
  /// the boundary.
  Polygon inner_polygon(const Polygon& P);
  MoveScript pullin_script(const Polygon& P, std::size_t max_len);
  BoundaryPoint boundary_point(const Boundary& b, std::uint64_t max_den = 12);

 private:
  std::mt19937_64 rng_;
};

Instance generate(std::size_t n, std::uint64_t seed, GenMode mode);

}  // namespace polyattain
