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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "polyattain/polygon.hpp"

namespace polyattain {

/// Replace q_mover by (1-c) q_mover + c q_target. Indices are 0-based.
struct PullIn {
  std::size_t mover = 0, target = 0;
  Rat c;

  friend bool operator==(const PullIn&, const PullIn&) = default;
};

/// Replace q_mover by landing, where q_mover lies on [q_pusher, landing].
struct PushOut {
  std::size_t mover = 0, pusher = 0;
  Point landing;

  friend bool operator==(const PushOut&, const PushOut&) = default;
};

struct MoveScript {
  Polygon start;
  std::vector<PullIn> moves;
};

using StochasticMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using PolygonMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, 2>;

/// Throws std::out_of_range on a bad index and std::invalid_argument when
/// c is outside [0,1] or mover == target.
Polygon apply_pullin(const Polygon& q, const PullIn& m);
/// Throws std::out_of_range / std::invalid_argument when the push-out is
/// not valid against q.
Polygon apply_pushout(const Polygon& q, const PushOut& m);
/// The pull-in taking apply_pushout(before, m) back to before.
PullIn invert_pushout(const Polygon& before, const PushOut& m);

Polygon apply_script(const MoveScript& s);

struct VerifyReport {
  bool ok = true;
  std::string message;
};

/// Replays s and compares the result with expected_end exactly. Failures
/// are reported, never thrown.
VerifyReport verify_script(const MoveScript& s, const Polygon& expected_end);

/// K^{ij}(c): identity except row i, which holds 1-c at i and c at j.
StochasticMatrix elementary(std::size_t n, const PullIn& m);
bool is_stochastic(const StochasticMatrix& d);

PolygonMatrix to_matrix(const Polygon& p);
Polygon from_matrix(const PolygonMatrix& m);

struct MatrixFactorization {
  std::vector<StochasticMatrix> factors;  // in application order
  StochasticMatrix product;               // last factor leftmost
};

/// product * to_matrix(s.start) == to_matrix(apply_script(s)).
MatrixFactorization script_to_matrix(const MoveScript& s);

/// Swaps two consecutive moves when their matrices provably commute:
/// disjoint index pairs, or identical (mover, target). Absent otherwise.
std::optional<std::pair<PullIn, PullIn>> commute_swap(const PullIn& first, const PullIn& second);

/// Applies push-outs to a working polygon and reverses them into a pull-in
/// script. Identity push-outs are dropped.
class PushOutRecorder {
 public:
  explicit PushOutRecorder(Polygon start) : start_(start), current_(std::move(start)) {}

  const Polygon& start() const { return start_; }
  const Polygon& current() const { return current_; }
  const std::vector<PushOut>& pushouts() const { return pushouts_; }
  std::size_t count() const { return pushouts_.size(); }

  /// Returns false for an identity push-out.
  bool push(std::size_t mover, std::size_t pusher, const Point& landing);

  /// Pull-ins from current() back to start().
  MoveScript reversed() const;

 private:
  Polygon start_, current_;
  std::vector<PushOut> pushouts_;
  std::vector<PullIn> inverses_;
};

}  // namespace polyattain
