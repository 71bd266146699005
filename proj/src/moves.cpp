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

#include "polyattain/moves.hpp"

#include <sstream>
#include <stdexcept>

namespace polyattain {
namespace {

void check_indices(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::out_of_range("vertex index out of range");
  if (i == j) throw std::invalid_argument("move needs two distinct vertices");
}

}  // namespace

Polygon apply_pullin(const Polygon& q, const PullIn& m) {
  check_indices(q.size(), m.mover, m.target);
  if (m.c < 0 || m.c > 1) throw std::invalid_argument("pull-in parameter outside [0,1]");
  Polygon r = q;
  r[m.mover] = lerp(q[m.mover], q[m.target], m.c);
  return r;
}

Polygon apply_pushout(const Polygon& q, const PushOut& m) {
  check_indices(q.size(), m.mover, m.pusher);
  if (!segment_contains(q[m.pusher], m.landing, q[m.mover]))
    throw std::invalid_argument("push-out mover not between pusher and landing");
  Polygon r = q;
  r[m.mover] = m.landing;
  return r;
}

PullIn invert_pushout(const Polygon& before, const PushOut& m) {
  check_indices(before.size(), m.mover, m.pusher);
  const Point& b = before[m.mover];
  const Point& w = before[m.pusher];
  if (!segment_contains(w, m.landing, b))
    throw std::invalid_argument("push-out mover not between pusher and landing");
  if (m.landing == b) return {m.mover, m.pusher, Rat(0)};
  if (w == b) return {m.mover, m.pusher, Rat(1)};
  // b = (1-c) landing + c w along the common line.
  return {m.mover, m.pusher, line_param(m.landing, w, b)};
}

Polygon apply_script(const MoveScript& s) {
  Polygon q = s.start;
  for (const PullIn& m : s.moves) q = apply_pullin(q, m);
  return q;
}

VerifyReport verify_script(const MoveScript& s, const Polygon& expected_end) {
  const std::size_t n = s.start.size();
  if (expected_end.size() != n) return {false, "vertex count mismatch"};
  Polygon q = s.start;
  for (std::size_t k = 0; k < s.moves.size(); ++k) {
    const PullIn& m = s.moves[k];
    const std::string at = " at move " + std::to_string(k + 1);
    if (m.mover >= n || m.target >= n) return {false, "index out of range" + at};
    if (m.mover == m.target) return {false, "mover equals target" + at};
    if (m.c < 0 || m.c > 1) return {false, "parameter out of range" + at};
    Polygon next = apply_pullin(q, m);
    if (!co_contains(q, next)) return {false, "hull grew" + at};
    q = std::move(next);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (q[i] != expected_end[i]) {
      std::ostringstream os;
      os << "final mismatch at vertex " << (i + 1) << ": got " << q[i] << ", expected "
         << expected_end[i];
      return {false, os.str()};
    }
  return {true, "ok"};
}

StochasticMatrix elementary(std::size_t n, const PullIn& m) {
  check_indices(n, m.mover, m.target);
  StochasticMatrix k = StochasticMatrix::Identity(n, n);
  k(m.mover, m.mover) = 1 - m.c;
  k(m.mover, m.target) = m.c;
  return k;
}

bool is_stochastic(const StochasticMatrix& d) {
  for (Eigen::Index r = 0; r < d.rows(); ++r) {
    Rat sum = 0;
    for (Eigen::Index c = 0; c < d.cols(); ++c) {
      if (d(r, c) < 0) return false;
      sum += d(r, c);
    }
    if (sum != 1) return false;
  }
  return true;
}

PolygonMatrix to_matrix(const Polygon& p) {
  PolygonMatrix m(static_cast<Eigen::Index>(p.size()), 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = p[i].x;
    m(static_cast<Eigen::Index>(i), 1) = p[i].y;
  }
  return m;
}

Polygon from_matrix(const PolygonMatrix& m) {
  std::vector<Point> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back({m(i, 0), m(i, 1)});
  return Polygon(std::move(v));
}

MatrixFactorization script_to_matrix(const MoveScript& s) {
  const std::size_t n = s.start.size();
  MatrixFactorization f;
  f.product = StochasticMatrix::Identity(n, n);
  for (const PullIn& m : s.moves) {
    f.factors.push_back(elementary(n, m));
    f.product = (f.factors.back() * f.product).eval();
  }
  return f;
}

std::optional<std::pair<PullIn, PullIn>> commute_swap(const PullIn& first, const PullIn& second) {
  const bool disjoint = first.mover != second.mover && first.mover != second.target &&
                        first.target != second.mover && first.target != second.target;
  const bool same = first.mover == second.mover && first.target == second.target;
  if (disjoint || same) return std::make_pair(second, first);
  return std::nullopt;
}

bool PushOutRecorder::push(std::size_t mover, std::size_t pusher, const Point& landing) {
  const PushOut m{mover, pusher, landing};
  PullIn inv = invert_pushout(current_, m);
  if (inv.c == 0) return false;
  current_ = apply_pushout(current_, m);
  pushouts_.push_back(m);
  inverses_.push_back(std::move(inv));
  return true;
}

MoveScript PushOutRecorder::reversed() const {
  return {current_, std::vector<PullIn>(inverses_.rbegin(), inverses_.rend())};
}

}  // namespace polyattain
