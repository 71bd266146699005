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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polyattain/degeneracy.hpp"
#include "polyattain/planners.hpp"
#include "support.hpp"

namespace {

using namespace polyattain;
using fixture::pt;
using fixture::realize_all;

// Vertex 1 on the bottom edge, the rest pulled outward until the clockwise
// broken line overshoots; found by random search and frozen.
Polygon overshoot() { return {pt("1/4", "0"), pt("7/8", "1/4"), pt("1/4", "7/8"), pt("1/8", "1/4")}; }

void expect_plan_verifies(const Verdict& v, const Polygon& P, const Polygon& Pp) {
  ASSERT_TRUE(v.plan);
  EXPECT_EQ(v.plan->script.start, P);
  const auto rep = verify_script(v.plan->script, Pp);
  EXPECT_TRUE(rep.ok) << rep.message;
  EXPECT_TRUE(within_bound(v.plan->bound_class, P.size(), v.plan->script.moves.size()));
}

TEST(ThresholdTest, PushedHalfSquareIsCertified) {
  const Polygon sq = fixture::square();
  const auto cert = threshold_test(sq, fixture::pbar(), 0);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->turn, Turn::Cw);
  EXPECT_EQ(realize_all(Boundary(sq), cert->points),
            (std::vector<Point>{pt("1/4", "0"), pt("1/4", "1"), pt("1", "5/8"), pt("7/12", "0")}));
}

TEST(ThresholdTest, OuterPolygonItselfIsCertified) {
  const Polygon sq = fixture::square();
  const auto cert = threshold_test(sq, sq, 0);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->l(), 4u);
}

TEST(ThresholdTest, OvershootIsRejected) {
  const Polygon sq = fixture::square();
  std::vector<BlcResult> runs;
  EXPECT_FALSE(threshold_test(sq, overshoot(), 0, &runs));
  ASSERT_EQ(runs.size(), 1u);
  const Boundary b(sq);
  EXPECT_EQ(realize_all(b, runs[0].points),
            (std::vector<Point>{pt("1/4", "0"), pt("0", "1/2"), pt("1/3", "1"), pt("1", "1/13")}));

  // Independent check: the vertex sits in [p_1, p_2) only, and the oracle's
  // clockwise run ends outside (p'_1, p_2].
  const oracle::ArcOrder ref(std::vector<Point>(sq.vertices().begin(), sq.vertices().end()));
  const auto inner = overshoot();
  const std::vector<Point> pts(inner.vertices().begin(), inner.vertices().end());
  const auto run = oracle::blc(ref, pts, pts[0], false);
  ASSERT_EQ(run.size(), 4u);
  EXPECT_FALSE(oracle::on_segment(pts[0], sq[1], run.back()) && run.back() != pts[0]);

  const Verdict v = decide(sq, overshoot());
  EXPECT_EQ(v.status, Status::Unattainable);
  EXPECT_FALSE(v.plan);
}

TEST(ThresholdTest, Preconditions) {
  const Polygon sq = fixture::square();
  EXPECT_THROW(threshold_test(sq, fixture::half_square(), 0), std::invalid_argument);
  EXPECT_THROW(threshold_test(sq, fixture::pbar(), 4), std::invalid_argument);
  // Not convex CCW: no certificate.
  const Polygon cw{pt("1/4", "0"), pt("1/4", "3/4"), pt("3/4", "3/4"), pt("3/4", "1/4")};
  EXPECT_FALSE(threshold_test(sq, cw, 0));
}

TEST(VestibuleTest, HalfSquare) {
  RejectionRecord rejected;
  const auto cert = vestibule_test(fixture::square(), fixture::half_square(), &rejected);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->pushout, (PushOut{0, 3, pt("1/4", "0")}));
  EXPECT_EQ(cert->threshold.vertex, 0u);
  EXPECT_TRUE(rejected.attempts.empty());
}

TEST(VestibuleTest, TouchingPolygonUsesIdentityPush) {
  const auto cert = vestibule_test(fixture::square(), fixture::pbar());
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->pushout.landing, pt("1/4", "0"));
  EXPECT_EQ(cert->pushout.mover, 0u);
}

TEST(VestibuleTest, RecordsEveryRejectedPush) {
  const Polygon P{pt("0", "0"), pt("1", "0"), pt("0", "1")};
  const Polygon Pp{pt("1/4", "1/4"), pt("1/4", "1/2"), pt("1/2", "1/4")};
  RejectionRecord rejected;
  EXPECT_FALSE(vestibule_test(P, Pp, &rejected));
  EXPECT_EQ(rejected.attempts.size(), 6u);
}

TEST(Decide, Examples) {
  const Polygon sq = fixture::square();
  Verdict v = decide(sq, sq);
  EXPECT_TRUE(attainable(v.status));
  ASSERT_TRUE(v.plan);
  EXPECT_TRUE(v.plan->script.moves.empty());

  v = decide(sq, fixture::half_square());
  EXPECT_EQ(v.status, Status::AttainableVestibule);
  EXPECT_LE(v.plan->script.moves.size(), 8u);
  expect_plan_verifies(v, sq, fixture::half_square());

  v = decide(sq, fixture::corner_quad());
  EXPECT_EQ(v.status, Status::AttainableDegenerate);
  EXPECT_LT(v.plan->script.moves.size(), 20u);
  expect_plan_verifies(v, sq, fixture::corner_quad());
}

TEST(Decide, ShrunkHalfSquareIsDegenerate) {
  const Polygon sq = fixture::square();
  const Polygon small{pt("3/8", "3/8"), pt("5/8", "3/8"), pt("5/8", "5/8"), pt("3/8", "5/8")};
  const Verdict v = decide(sq, small);
  EXPECT_EQ(v.status, Status::AttainableDegenerate);
  const auto& d = std::get<DegeneracyVerdict>(v.certificate);
  ASSERT_TRUE(d.witness);
  // Oracle containment check of the witness triangle.
  const auto& w = *d.witness;
  ASSERT_EQ(w.size(), 3u);
  for (const Point& u : small.vertices())
    for (std::size_t k = 0; k < 3; ++k) EXPECT_GE(oracle::det3(w[k], w[(k + 1) % 3], u), 0);
  expect_plan_verifies(v, sq, small);
}

TEST(Decide, DoublePointsAreRoutedToTheDegenerateBranch) {
  const Polygon sq = fixture::square();
  const Polygon twin{pt("1/4", "1/4"), pt("1/4", "1/4"), pt("3/4", "3/4"), pt("1/4", "3/4")};
  const Verdict v = decide(sq, twin);
  EXPECT_EQ(v.status, Status::AttainableDegenerate);
  expect_plan_verifies(v, sq, twin);
}

TEST(Decide, NotSetConvexOuterIsDegenerate) {
  const Polygon P{pt("0", "0"), pt("1", "0"), pt("2", "0"), pt("0", "1")};
  const Polygon Pp{pt("1/2", "1/4"), pt("1", "1/4"), pt("1/2", "1/2"), pt("1/4", "1/2")};
  const Verdict v = decide(P, Pp);
  EXPECT_EQ(v.status, Status::AttainableDegenerate);
  expect_plan_verifies(v, P, Pp);
}

TEST(Decide, TrianglesOutsideTheVestibuleAreUnknown) {
  const Polygon P{pt("0", "0"), pt("1", "0"), pt("0", "1")};
  const Polygon Pp{pt("1/4", "1/4"), pt("1/4", "1/2"), pt("1/2", "1/4")};
  const Verdict v = decide(P, Pp);
  EXPECT_EQ(v.status, Status::UnknownN3);
  EXPECT_FALSE(attainable(v.status));
  EXPECT_FALSE(v.plan);
}

TEST(Decide, RelabelledOuterPolygon) {
  // The same configuration as the half-square, with both polygons listed in
  // a scrambled order.
  const Polygon P{pt("0", "0"), pt("1", "1"), pt("1", "0"), pt("0", "1")};
  const Polygon Pp{pt("1/4", "1/4"), pt("3/4", "3/4"), pt("3/4", "1/4"), pt("1/4", "3/4")};
  const Verdict v = decide(P, Pp);
  EXPECT_EQ(v.status, Status::AttainableVestibule);
  EXPECT_EQ(v.sigma, (std::vector<std::size_t>{0, 2, 1, 3}));
  expect_plan_verifies(v, P, Pp);
}

TEST(Decide, Preconditions) {
  EXPECT_THROW(decide(fixture::square(), Polygon{pt("0", "0"), pt("2", "0"), pt("0", "1"), pt("0", "0")}),
               std::invalid_argument);
  EXPECT_THROW(decide(fixture::square(), Polygon{pt("0", "0"), pt("1", "0"), pt("0", "1")}), std::invalid_argument);
}

TEST(Decide, ClosedUnderPullIns) {
  Generator g(71);
  for (int k = 0; k < 150; ++k) {
    const Polygon P = g.convex_polygon(4 + k % 3);
    const MoveScript s = g.pullin_script(P, 10);
    const Polygon end = apply_script(s);
    const Verdict v = decide(P, end);
    ASSERT_TRUE(attainable(v.status)) << P << " -> " << end;
    expect_plan_verifies(v, P, end);
  }
}

TEST(Decide, CertificatesRevalidate) {
  Generator g(72);
  int seen = 0;
  for (int k = 0; k < 300; ++k) {
    const Polygon P = g.convex_polygon(4 + k % 3);
    const Polygon Pp = g.inner_polygon(P);
    const Verdict v = decide(P, Pp, false);
    const auto* cert = std::get_if<VestibuleCertificate>(&v.certificate);
    if (v.status != Status::AttainableVestibule || !cert) continue;
    ++seen;
    const Polygon bar = apply_pushout(Pp, cert->pushout);
    const auto& run = cert->threshold.blc;
    const oracle::ArcOrder ref(std::vector<Point>(P.vertices().begin(), P.vertices().end()));
    const std::vector<Point> inner(bar.vertices().begin(), bar.vertices().end());
    const Point start = bar[cert->threshold.vertex];
    EXPECT_EQ(realize_all(Boundary(P), run.points), oracle::blc(ref, inner, start, run.turn == Turn::Ccw));
    EXPECT_EQ(run.l(), P.size());
  }
  EXPECT_GT(seen, 20);
}

// Pushing a vertex of an unattainable polygon outward cannot make it
// attainable: the pushed polygon pulls back to the original in one move.
TEST(Decide, RejectionsSurviveOutwardPushes) {
  Generator g(73);
  std::vector<std::pair<Polygon, Polygon>> rejected{{fixture::square(), overshoot()}};
  for (int k = 0; k < 2000 && rejected.size() < 15; ++k) {
    const Polygon P = g.convex_polygon(4 + k % 3);
    Polygon Pp = g.inner_polygon(P);
    if (k % 2) std::swap(Pp[0], Pp[1]);  // scrambled orders are often rejected
    if (decide(P, Pp, false).status == Status::Unattainable) rejected.push_back({P, Pp});
  }
  ASSERT_GE(rejected.size(), 10u);
  int trials = 0;
  for (const auto& [P, Pp] : rejected) {
    const Boundary b(P);
    for (int s = 0; s < 40; ++s) {
      const std::size_t i = g.uniform(0, P.size() - 1), j = (i + g.uniform(1, P.size() - 1)) % P.size();
      if (Pp[i] == Pp[j]) continue;
      const Point far = b.realize(ray_polygon_exit(Ray(Pp[j], Pp[i] - Pp[j]), b));
      const Point land = lerp(Pp[i], far, g.unit_rational(8));
      const Polygon Q = apply_pushout(Pp, {i, j, land});
      EXPECT_EQ(decide(P, Q, false).status, Status::Unattainable) << P << " / " << Q;
      ++trials;
    }
  }
  EXPECT_GT(trials, 300);
}

}  // namespace
