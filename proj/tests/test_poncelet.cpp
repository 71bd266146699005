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

#include <set>

#include "oracle.hpp"
#include "support.hpp"

namespace {

using namespace polyattain;
using fixture::pt;
using fixture::realize_all;

class SquareMap : public ::testing::Test {
 protected:
  Boundary sq{fixture::square()};
  PonceletMap map{sq, fixture::half_square()};
  BoundaryPoint at(const char* x, const char* y) const { return *sq.locate(pt(x, y)); }
  Point image(const char* x, const char* y, Turn t = Turn::Ccw) const { return sq.realize(map.eval(at(x, y), t)); }
};

TEST_F(SquareMap, TangentExamples) {
  auto e = map.tangent(at("1/2", "0"));
  EXPECT_EQ(e.pivot(), pt("3/4", "1/4"));
  EXPECT_EQ(e.kind, TangentEval::Case::Interior);
  EXPECT_EQ(sq.realize(e.image), pt("1", "1/2"));

  e = map.tangent(at("0", "0"));
  EXPECT_EQ(e.pivot(), pt("3/4", "1/4"));
  EXPECT_EQ(sq.realize(e.image), pt("1", "1/3"));

  e = map.tangent(at("0", "1/4"));
  EXPECT_EQ(e.pivots, (std::vector<Point>{pt("1/4", "1/4"), pt("3/4", "1/4")}));
  EXPECT_EQ(sq.realize(e.image), pt("1", "1/4"));

  const auto free_fn = right_tangent(sq, fixture::half_square(), pt("1/2", "0"));
  EXPECT_EQ(free_fn.image, map.tangent(at("1/2", "0")).image);
}

TEST_F(SquareMap, MapExamples) {
  EXPECT_EQ(image("1/2", "0"), pt("1", "1/2"));
  EXPECT_EQ(image("3/5", "1"), pt("0", "4/7"));
  EXPECT_EQ(sq.realize(poncelet(sq, fixture::half_square(), at("1/2", "0"))), pt("1", "1/2"));
}

TEST_F(SquareMap, ClockwiseExamples) {
  EXPECT_EQ(image("1", "1/2", Turn::Cw), pt("1/2", "0"));
  const Polygon bar = fixture::pbar();
  EXPECT_EQ(sq.realize(poncelet_cw(sq, bar, at("1/4", "0"))), pt("1/4", "1"));
  const PonceletMap m(sq, bar);
  const auto e = m.tangent(at("7/12", "0"), Turn::Cw);
  EXPECT_EQ(sq.realize(e.image), pt("0", "0"));
  EXPECT_EQ(e.kind, TangentEval::Case::Boundary);
}

TEST(PonceletMap, BoundaryCaseAlongTheEdge) {
  const Boundary sq(fixture::square());
  const Polygon inner{pt("1/2", "0"), pt("3/4", "1/2"), pt("1/4", "1/2")};
  const PonceletMap m(sq, inner);
  const auto e = m.tangent(*sq.locate(pt("1/4", "0")));
  EXPECT_EQ(e.kind, TangentEval::Case::Boundary);
  EXPECT_EQ(sq.realize(e.image), pt("1", "0"));
  EXPECT_EQ(e.pivot(), pt("1/2", "0"));
}

TEST(PonceletMap, RejectsBadInputs) {
  const Boundary sq(fixture::square());
  EXPECT_THROW(PonceletMap(sq, Polygon{pt("0", "0"), pt("1", "1"), pt("1/2", "1/2")}), std::invalid_argument);
  EXPECT_THROW(PonceletMap(sq, Polygon{pt("0", "0"), pt("2", "0"), pt("1", "1")}), std::invalid_argument);
}

TEST(PonceletMap, AgreesWithBruteForceOracle) {
  Generator g(31);
  for (int k = 0; k < 200; ++k) {
    const Polygon P = g.convex_polygon(3 + k % 6);
    const Polygon Pp = g.inner_polygon(P);
    if (collinear(Pp)) continue;
    const PonceletMap map(Boundary(P), Pp);
    const oracle::ArcOrder ref(std::vector<Point>(P.vertices().begin(), P.vertices().end()));
    const std::vector<Point> inner(Pp.vertices().begin(), Pp.vertices().end());
    for (int s = 0; s < 10; ++s) {
      const BoundaryPoint x = g.boundary_point(map.outer(), 10);
      const Point xp = map.outer().realize(x);
      if (std::count(inner.begin(), inner.end(), xp)) continue;  // oracle needs x off the inner polygon
      for (Turn t : {Turn::Ccw, Turn::Cw}) {
        const auto e = map.tangent(x, t);
        EXPECT_EQ(map.outer().realize(e.image), oracle::pi(ref, inner, xp, t == Turn::Ccw));
        EXPECT_EQ(e.pivot(), *oracle::tangent_pivot(xp, inner, t == Turn::Ccw ? 1 : -1));
        // Every inner vertex lies weakly on the tangent's side.
        for (const Point& u : inner)
          EXPECT_GE(orient(e.ray.origin, e.ray.origin + e.ray.dir, u) * (t == Turn::Ccw ? 1 : -1), 0);
      }
    }
  }
}

TEST(PonceletMap, NoFixedPoints) {
  Generator g(32);
  for (int k = 0; k < 200; ++k) {
    const Polygon P = g.convex_polygon(3 + k % 6);
    const Polygon Pp = g.inner_polygon(P);
    if (collinear(Pp)) continue;
    const PonceletMap map(Boundary(P), Pp);
    for (int s = 0; s < 10; ++s) {
      const BoundaryPoint x = g.boundary_point(map.outer(), 10);
      const BoundaryPoint y = map(x);
      EXPECT_NE(x, y);
      EXPECT_NE(x.edge, y.edge);
    }
  }
}

TEST(JunctureSets, SquareExample) {
  const Boundary sq(fixture::square());
  const PonceletMap map(sq, fixture::half_square());
  const auto j = gamma_sets(map);
  const auto g1 = realize_all(sq, j.gamma1);
  EXPECT_EQ(std::set<Point>(g1.begin(), g1.end()),
            (std::set<Point>{pt("0", "1/4"), pt("3/4", "0"), pt("1", "3/4"), pt("1/4", "1")}));
  EXPECT_TRUE(j.gamma2_computed);
  // The four corners are the preimages of the corners.
  const auto g2 = realize_all(sq, j.gamma2);
  for (const Point& p : g2) EXPECT_TRUE(sq.is_vertex(*sq.locate(map.outer().realize(map(*sq.locate(p))))));
  EXPECT_EQ(degeneracy_test_points(map).size(), 8u);
}

TEST(JunctureSets, SharedVertexIsDeduplicated) {
  // Extending the inner edge from (1/2,1/2) through (3/4,1/4) meets the corner
  // (1,0), so that corner is both a vertex and a first-set juncture.
  const Boundary sq(fixture::square());
  const Polygon inner{pt("1/4", "1/4"), pt("3/4", "1/4"), pt("1/2", "1/2")};
  const PonceletMap map(sq, inner);
  const auto j = gamma_sets(map);
  EXPECT_TRUE(std::count(j.gamma1.begin(), j.gamma1.end(), *sq.locate(pt("1", "0"))));
  std::size_t off_vertex = 0;
  for (const auto& x : j.gamma1) off_vertex += !sq.is_vertex(x);
  const auto T = degeneracy_test_points(map);
  EXPECT_EQ(T.size(), 4 + off_vertex);
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = a + 1; b < T.size(); ++b) EXPECT_NE(T[a], T[b]);
}

TEST(JunctureSets, TouchingInnerPolygonSkipsSecondSet) {
  const Boundary sq(fixture::square());
  const PonceletMap map(sq, fixture::pbar());
  const auto j = gamma_sets(map);
  EXPECT_FALSE(j.gamma2_computed);
  EXPECT_TRUE(j.gamma2.empty());
}

// Between consecutive juncture points the map is constant or one increasing
// perspectivity through a fixed pivot. The second juncture set is only built
// for interior inner polygons, so that is the regime sampled here.
TEST(JunctureSets, MapIsPiecewiseProjective) {
  Generator g(33);
  int projective = 0, constant = 0;
  for (int k = 0; k < 60; ++k) {
    const Polygon P = g.convex_polygon(3 + k % 5);
    const Polygon Pp = g.interior_polygon(P);
    if (collinear(Pp)) continue;
    const PonceletMap map(Boundary(P), Pp);
    const Boundary& b = map.outer();
    const auto gamma = gamma_sets(map).gamma;
    for (std::size_t q = 0; q < gamma.size(); ++q) {
      const BoundaryPoint lo = gamma[q], hi = gamma[(q + 1) % gamma.size()];
      ASSERT_TRUE(hi.edge == lo.edge || hi.t == 0);
      const Rat t1 = lo.t, t2 = hi.edge == lo.edge && hi.t != 0 ? hi.t : Rat(1);
      std::vector<BoundaryPoint> xs;
      for (int s = 1; s <= 5; ++s) xs.push_back({lo.edge, t1 + (t2 - t1) * Rat(s, 6)});
      std::vector<TangentEval> ev;
      for (const auto& x : xs) ev.push_back(map.tangent(x));
      bool same = true;
      for (const auto& e : ev) same = same && e.image == ev[0].image;
      if (same) {
        const Point y = b.realize(ev[0].image);
        const bool at_vertex = b.is_vertex(ev[0].image);
        const bool at_inner = std::count(Pp.vertices().begin(), Pp.vertices().end(), y) > 0;
        EXPECT_TRUE(at_vertex || at_inner);
        ++constant;
        continue;
      }
      const Point pivot = ev[0].pivot();
      const std::size_t target_edge = ev[0].image.edge;
      const Perspectivity persp(DirectedLine::through(b.vertex(lo.edge), b.vertex(lo.edge + 1)),
                                DirectedLine::through(b.vertex(target_edge), b.vertex(target_edge + 1)), pivot);
      EXPECT_NE(persp_classify(persp).kind, PerspClass::Kind::OrientationReversing);
      Rat last(-1);
      for (std::size_t s = 0; s < xs.size(); ++s) {
        EXPECT_EQ(ev[s].pivot(), pivot);
        const auto y = persp_eval(persp, b.realize(xs[s]));
        ASSERT_TRUE(std::holds_alternative<Point>(y));
        EXPECT_EQ(std::get<Point>(y), b.realize(ev[s].image));
        EXPECT_EQ(ev[s].image.edge, target_edge);
        EXPECT_GT(ev[s].image.t, last);
        last = ev[s].image.t;
      }
      ++projective;
    }
  }
  EXPECT_GT(projective, 0);
  EXPECT_EQ(constant, 0);  // the map is a bijection for interior inner polygons
}

TEST(Blc, SquareExamples) {
  const Boundary sq(fixture::square());
  const PonceletMap map(sq, fixture::half_square());
  auto at = [&](const char* x, const char* y) { return *sq.locate(pt(x, y)); };

  auto r = blc(map, at("0", "0"));
  EXPECT_EQ(realize_all(sq, r.points), (std::vector<Point>{pt("0", "0"), pt("1", "1/3"), pt("3/5", "1"), pt("0", "4/7")}));
  EXPECT_EQ(sq.realize(r.stop_image), pt("4/9", "0"));
  EXPECT_EQ(r.l(), 4u);

  r = blc(map, at("0", "1/4"));
  EXPECT_EQ(realize_all(sq, r.points), (std::vector<Point>{pt("0", "1/4"), pt("1", "1/4"), pt("5/8", "1"), pt("0", "7/12")}));
  EXPECT_EQ(sq.realize(r.stop_image), pt("7/16", "0"));

  const PonceletMap bar(sq, fixture::pbar());
  r = blc(bar, at("1/4", "0"), Turn::Cw);
  EXPECT_EQ(realize_all(sq, r.points),
            (std::vector<Point>{pt("1/4", "0"), pt("1/4", "1"), pt("1", "5/8"), pt("7/12", "0")}));
  EXPECT_EQ(sq.realize(r.stop_image), pt("0", "0"));
}

TEST(Blc, MatchesOracleAndStructure) {
  Generator g(34);
  for (int k = 0; k < 300; ++k) {
    const Polygon P = g.convex_polygon(3 + k % 6);
    const Polygon Pp = k % 2 ? g.inner_polygon(P) : g.interior_polygon(P);
    if (collinear(Pp)) continue;
    const PonceletMap map(Boundary(P), Pp);
    const oracle::ArcOrder ref(std::vector<Point>(P.vertices().begin(), P.vertices().end()));
    const std::vector<Point> inner(Pp.vertices().begin(), Pp.vertices().end());
    const BoundaryPoint x = g.boundary_point(map.outer(), 10);
    const Point xp = map.outer().realize(x);
    if (std::count(inner.begin(), inner.end(), xp)) continue;
    const auto r = blc(map, x);
    Point stop;
    EXPECT_EQ(realize_all(map.outer(), r.points), oracle::blc(ref, inner, xp, true, &stop));
    EXPECT_EQ(map.outer().realize(r.stop_image), stop);
    EXPECT_EQ(fixture::check_broken_line(map, r), std::nullopt);
    const auto c = blc(map, x, Turn::Cw);
    EXPECT_EQ(realize_all(map.outer(), c.points), oracle::blc(ref, inner, xp, false));
  }
}

// A good start point stays good under the map.
TEST(Blc, GoodPointsAreForwardInvariant) {
  Generator g(35);
  int goods = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 4 + k % 4;
    const Polygon P = g.convex_polygon(n);
    const Polygon Pp = g.inner_polygon(P);
    if (collinear(Pp)) continue;
    const PonceletMap map(Boundary(P), Pp);
    for (int s = 0; s < 10; ++s) {
      const BoundaryPoint x = g.boundary_point(map.outer(), 10);
      if (blc(map, x).l() >= n) continue;
      ++goods;
      BoundaryPoint y = x;
      for (int step = 0; step < 3; ++step) {
        y = map(y);
        EXPECT_LT(blc(map, y).l(), n);
      }
    }
  }
  EXPECT_GT(goods, 100);
}

}  // namespace
