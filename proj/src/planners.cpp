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

#include "polyattain/planners.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyattain/degeneracy.hpp"

namespace polyattain {

const char* to_string(BoundClass b) {
  switch (b) {
    case BoundClass::DegenerateLt5n: return "DegenerateLt5n";
    case BoundClass::Threshold2nMinus1: return "Threshold2nMinus1";
    case BoundClass::Vestibule2n: return "Vestibule2n";
    case BoundClass::DirectShort: return "DirectShort";
  }
  return "?";
}

bool within_bound(BoundClass b, std::size_t n, std::size_t length) {
  switch (b) {
    case BoundClass::DegenerateLt5n: return length < 5 * n;
    case BoundClass::Threshold2nMinus1: return length + 1 <= 2 * n;
    case BoundClass::Vestibule2n: return length <= 2 * n;
    case BoundClass::DirectShort: return length <= n;
  }
  return false;
}

std::vector<Polygon> trace(const MoveScript& s) {
  std::vector<Polygon> t{s.start};
  for (const PullIn& m : s.moves) t.push_back(apply_pullin(t.back(), m));
  return t;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// The hull of an interpolant: a convex polygon, a segment, or a point.
class Target {
 public:
  explicit Target(std::vector<Point> hull) : v_(std::move(hull)) {
    if (v_.size() >= 3) b_.emplace(Polygon(v_));
  }

  std::size_t size() const { return v_.size(); }
  const Point& vertex(std::size_t k) const { return v_[k % v_.size()]; }
  std::size_t edges() const { return v_.size() == 2 ? 1 : v_.size(); }
  const Point& edge_start(std::size_t e) const { return v_[e]; }
  const Point& edge_end(std::size_t e) const { return vertex(e + 1); }

  bool is_vertex(const Point& q) const { return std::find(v_.begin(), v_.end(), q) != v_.end(); }

  bool on_boundary(const Point& q) const {
    if (v_.size() == 1) return q == v_[0];
    if (v_.size() == 2) return segment_contains(v_[0], v_[1], q);
    return b_->on_boundary(q);
  }

  bool edge_contains(std::size_t e, const Point& q) const {
    return segment_contains(edge_start(e), edge_end(e), q);
  }

  // Edge holding a boundary point that is not a vertex.
  std::optional<std::size_t> stray_edge(const Point& q) const {
    if (v_.size() == 1 || is_vertex(q)) return std::nullopt;
    if (v_.size() == 2)
      return segment_contains(v_[0], v_[1], q) ? std::optional<std::size_t>(0) : std::nullopt;
    const auto loc = b_->locate(q);
    if (!loc) return std::nullopt;
    return loc->edge;
  }

  // Where `through` lands when pushed out by `from`.
  Point exit(const Point& from, const Point& through) const {
    if (v_.size() == 1) return v_[0];
    if (v_.size() == 2) return dot(through - from, v_[1] - v_[0]) > 0 ? v_[1] : v_[0];
    return b_->realize(ray_polygon_exit(Ray(from, through - from), *b_));
  }

 private:
  std::vector<Point> v_;
  std::optional<Boundary> b_;
};

// All vertices onto the target boundary: vertex 0 pushes the rest, then
// vertex 1 pushes vertex 0.
std::size_t inscribe(PushOutRecorder& rec, const Target& t) {
  const std::size_t before = rec.count();
  const std::size_t n = rec.current().size();
  for (std::size_t k = 1; k < n; ++k) {
    const Polygon& w = rec.current();
    if (t.on_boundary(w[k])) continue;
    const Point& through = w[k] == w[0] ? t.vertex(0) : w[k];
    rec.push(k, 0, t.exit(w[0], through));
  }
  const Polygon& w = rec.current();
  if (!t.on_boundary(w[0])) rec.push(0, 1, t.exit(w[1], w[0]));
  return rec.count() - before;
}

// Moves every inscribed vertex onto a target vertex. Stranded vertices are
// freed with a double point when allowed.
std::size_t snap_to_vertices(PushOutRecorder& rec, const Target& t, bool use_double_points) {
  const std::size_t before = rec.count();
  const std::size_t n = rec.current().size();
  for (;;) {
    const Polygon& w = rec.current();
    std::vector<std::size_t> strays;
    for (std::size_t k = 0; k < n; ++k) {
      require(t.on_boundary(w[k]), "vertex left the target boundary");
      if (!t.is_vertex(w[k])) strays.push_back(k);
    }
    if (strays.empty()) break;

    bool moved = false;
    for (std::size_t s : strays) {
      const std::size_t e = *t.stray_edge(w[s]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == s || !t.edge_contains(e, w[j])) continue;
        const Point& far = (w[j] == w[s] || segment_contains(w[j], t.edge_end(e), w[s]))
                               ? t.edge_end(e)
                               : t.edge_start(e);
        rec.push(s, j, far);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (moved) continue;

    require(use_double_points, "stranded vertex in a full-occupancy sweep");
    std::optional<std::pair<std::size_t, std::size_t>> dbl;
    for (std::size_t v = 0; v < t.size() && !dbl; ++v) {
      std::vector<std::size_t> occ;
      for (std::size_t k = 0; k < n; ++k)
        if (w[k] == t.vertex(v)) occ.push_back(k);
      if (occ.size() >= 2) dbl.emplace(occ[0], occ[1]);
    }
    require(dbl.has_value(), "no double point to free a stranded vertex");
    const std::size_t s = strays.front();
    const std::size_t e = *t.stray_edge(w[s]);
    const Point start = t.edge_start(e), end = t.edge_end(e);
    rec.push(dbl->first, dbl->second, start);
    rec.push(s, dbl->first, end);
  }
  return rec.count() - before;
}

// From a polygon whose vertices all sit on points of r (which has a
// repeated point) to r itself.
std::size_t permute_to(PushOutRecorder& rec, const Polygon& r) {
  const std::size_t before = rec.count();
  const std::size_t n = r.size();
  auto occupants = [&](const Point& q) {
    std::vector<std::size_t> occ;
    for (std::size_t k = 0; k < n; ++k)
      if (rec.current()[k] == q) occ.push_back(k);
    return occ;
  };

  // Incorrect vertices sharing a point go straight home.
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k < n && !moved; ++k) {
      const Polygon& w = rec.current();
      if (w[k] == r[k]) continue;
      const auto occ = occupants(w[k]);
      if (occ.size() < 2) continue;
      const std::size_t pusher = occ[0] == k ? occ[1] : occ[0];
      rec.push(k, pusher, r[k]);
      moved = true;
    }
  }

  std::vector<bool> done(n, false);
  for (std::size_t k = 0; k < n; ++k) done[k] = rec.current()[k] == r[k];
  if (std::all_of(done.begin(), done.end(), [](bool b) { return b; }))
    return rec.count() - before;

  // Borrow the lowest-index vertex sharing a point with another.
  std::optional<std::size_t> borrowed;
  for (std::size_t k = 0; k < n && !borrowed; ++k)
    if (occupants(rec.current()[k]).size() >= 2) borrowed = k;
  require(borrowed.has_value(), "permutation needs a double point");
  const std::size_t b = *borrowed;
  const Point home = rec.current()[b];

  auto push_with_company = [&](std::size_t mover, const Point& landing) {
    const auto occ = occupants(rec.current()[mover]);
    const auto it = std::find_if(occ.begin(), occ.end(), [&](std::size_t k) { return k != mover; });
    require(it != occ.end(), "borrowed vertex has no company");
    rec.push(mover, *it, landing);
  };

  for (std::size_t k0 = 0; k0 < n; ++k0) {
    if (done[k0]) continue;
    push_with_company(b, rec.current()[k0]);
    // Cycle forward: each vertex moves onto the point held by the next one.
    for (std::size_t k = k0;;) {
      const Point y = r[k];
      std::optional<std::size_t> next;
      for (std::size_t j = 0; j < n; ++j)
        if (j != b && j != k && !done[j] && rec.current()[j] == y) next = j;
      push_with_company(k, y);
      done[k] = true;
      if (!next) break;
      k = *next;
    }
  }
  push_with_company(b, home);
  require(rec.current() == r, "permutation did not reach its target");
  return rec.count() - before;
}

MoveScript remap(const MoveScript& s, const std::vector<std::size_t>& sigma, const Polygon& start) {
  MoveScript out{start, {}};
  for (const PullIn& m : s.moves) out.moves.push_back({sigma[m.mover], sigma[m.target], m.c});
  return out;
}

PlanOutcome finish(MoveScript script, BoundClass bc, const Polygon& end) {
  const VerifyReport v = verify_script(script, end);
  require(v.ok, "planned script failed verification");
  require(within_bound(bc, script.start.size(), script.moves.size()), "move bound exceeded");
  std::vector<Polygon> t = trace(script);
  return {std::move(script), bc, std::move(t)};
}

// Degenerate planning for a P that is either convex CCW or not set-convex.
MoveScript degenerate_pushouts(const Polygon& P, const Polygon& Pp,
                               std::span<const Point> witness) {
  const std::size_t n = P.size();
  PushOutRecorder rec(Pp);
  const bool set_convex = is_set_convex(P);

  std::vector<Point> q;
  if (set_convex) {
    q = maximal_degenerate_extend(witness, Boundary(P));
  } else {
    q = convex_hull(P.vertices());
  }
  const Target target(convex_hull(q));

  const std::size_t a = inscribe(rec, target);
  require(a <= n, "inscribing exceeded n moves");
  const std::size_t b = snap_to_vertices(rec, target, true);
  require(2 * b < 3 * n, "vertex sweep exceeded 3n/2 moves");

  // r: the polygon with a repeated vertex that the permutation step aims
  // at; tail: push-outs taking r to P.
  Polygon r = P;
  std::vector<PushOut> tail;
  if (!set_convex) {
    std::vector<bool> extreme(n, false);
    for (const Point& h : q)
      extreme[static_cast<std::size_t>(std::find(P.vertices().begin(), P.vertices().end(), h) -
                                        P.vertices().begin())] = true;
    const auto i0 = static_cast<std::size_t>(std::find(extreme.begin(), extreme.end(), true) -
                                             extreme.begin());
    for (std::size_t k = 0; k < n; ++k)
      if (!extreme[k]) {
        r[k] = P[i0];
        tail.push_back({k, i0, P[k]});
      }
  } else {
    // (q1, q1, q2, ..., q_{n-1}) grows into a relabelled P.
    std::vector<Point> qt{q[0]};
    qt.insert(qt.end(), q.begin(), q.end());
    std::size_t spare = 0;
    while (std::find(q.begin(), q.end(), P[spare]) != q.end()) ++spare;
    PushOutRecorder grow{Polygon(qt)};
    grow.push(1, 0, P[spare]);
    snap_to_vertices(grow, Target(convex_hull(P.vertices())), false);
    std::vector<std::size_t> tau(n);
    std::vector<bool> hit(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = std::find(P.vertices().begin(), P.vertices().end(), grow.current()[j]);
      tau[j] = static_cast<std::size_t>(it - P.vertices().begin());
      require(it != P.vertices().end() && !hit[tau[j]], "grown polygon is not a relabelled P");
      hit[tau[j]] = true;
    }
    for (std::size_t j = 0; j < n; ++j) r[tau[j]] = qt[j];
    for (const PushOut& m : grow.pushouts()) tail.push_back({tau[m.mover], tau[m.pusher], m.landing});
  }

  const std::size_t c = permute_to(rec, r);
  require(2 * c <= 3 * n, "permutation exceeded 3n/2 moves");
  for (const PushOut& m : tail) rec.push(m.mover, m.pusher, m.landing);
  require(rec.current() == P, "degenerate push-outs did not reach P");
  require(rec.count() < 5 * n, "degenerate push-outs reached 5n");
  return rec.reversed();
}

}  // namespace

PlanOutcome plan_degenerate(const Polygon& P, const Polygon& Pp, std::span<const Point> witness) {
  if (!certifies_degeneracy(P, Pp, witness))
    throw std::invalid_argument("witness fails certification");
  if (!is_set_convex(P))
    return finish(degenerate_pushouts(P, Pp, witness), BoundClass::DegenerateLt5n, Pp);
  const Canonical c = *canonicalize_ccw(P);
  std::vector<Point> pp;
  for (std::size_t k = 0; k < P.size(); ++k) pp.push_back(Pp[c.sigma[k]]);
  const MoveScript s = degenerate_pushouts(c.polygon, Polygon(pp), witness);
  return finish(remap(s, c.sigma, P), BoundClass::DegenerateLt5n, Pp);
}

PlanOutcome plan_threshold(const Polygon& P, const Polygon& Pp, std::size_t i, const BlcResult& cert) {
  const Boundary B(P);
  const std::size_t n = P.size();
  if (Pp.size() != n || i >= n) throw std::invalid_argument("certificate invalid: bad index");
  if (!is_convex_ccw(Pp)) throw std::invalid_argument("certificate invalid: Pp not convex CCW");
  const auto x1 = B.locate(Pp[i]);
  if (!x1 || cert.l() != n || cert.points.front() != *x1)
    throw std::invalid_argument("certificate invalid: wrong start or length");
  const PonceletMap map(B, Pp);
  const BlcResult rerun = blc(map, *x1, cert.turn);
  if (rerun.points != cert.points) throw std::invalid_argument("certificate invalid: rerun differs");

  const bool ccw = cert.turn == Turn::Ccw;
  const auto step = [&](std::size_t k) { return ccw ? (i + k) % n : (i + n - k % n) % n; };
  const BoundaryPoint pi = B.corner(i);
  const BoundaryPoint prev = B.corner(i + n - 1), next = B.corner(i + 1);
  const BoundaryPoint& xn = cert.points.back();
  const bool ok = ccw ? B.in_arc(*x1, prev, pi, false, true) && B.in_arc(xn, prev, *x1, true, false)
                      : B.in_arc(*x1, pi, next, true, false) && B.in_arc(xn, *x1, next, false, true);
  if (!ok) throw std::invalid_argument("certificate invalid: broken line ends outside the interval");

  PushOutRecorder rec(Pp);
  for (std::size_t k = 1; k < n; ++k) rec.push(step(k), step(k - 1), B.realize(cert.points[k]));
  rec.push(i, step(n - 1), P[i]);
  snap_to_vertices(rec, Target(convex_hull(P.vertices())), false);
  require(rec.current() == P, "threshold push-outs did not reach P");
  return finish(rec.reversed(), BoundClass::Threshold2nMinus1, Pp);
}

PlanOutcome plan_vestibule(const Polygon& P, const Polygon& Pp, const PushOut& pushout,
                           const PlanOutcome& threshold_plan) {
  const Polygon bar = apply_pushout(Pp, pushout);
  if (threshold_plan.script.start != P || !verify_script(threshold_plan.script, bar).ok)
    throw std::invalid_argument("threshold plan does not reach the pushed-out polygon");
  MoveScript s = threshold_plan.script;
  const PullIn tail = invert_pushout(Pp, pushout);
  const bool identity = tail.c == 0;
  if (!identity) s.moves.push_back(tail);
  return finish(std::move(s), identity ? BoundClass::Threshold2nMinus1 : BoundClass::Vestibule2n, Pp);
}

}  // namespace polyattain
