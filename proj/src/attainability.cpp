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

#include "polyattain/attainability.hpp"

#include <numeric>
#include <stdexcept>

namespace polyattain {

const char* to_string(Status s) {
  switch (s) {
    case Status::AttainableDegenerate: return "AttainableDegenerate";
    case Status::AttainableVestibule: return "AttainableVestibule";
    case Status::Unattainable: return "Unattainable";
    case Status::UnknownN3: return "UnknownN3";
  }
  return "?";
}

std::optional<BlcResult> threshold_test(const Polygon& P, const Polygon& Pp, std::size_t i,
                                        std::vector<BlcResult>* failed_runs) {
  const Boundary B(P);
  const std::size_t n = P.size();
  if (Pp.size() != n || i >= n) throw std::invalid_argument("bad vertex index");
  const auto x1 = B.locate(Pp[i]);
  if (!x1) throw std::invalid_argument("vertex not on the boundary");
  if (!is_convex_ccw(Pp)) return std::nullopt;

  const PonceletMap map(B, Pp);
  const BoundaryPoint pi = B.corner(i), prev = B.corner(i + n - 1), next = B.corner(i + 1);
  auto attempt = [&](Turn turn) -> std::optional<BlcResult> {
    BlcResult r = blc(map, *x1, turn);
    const bool ok = r.l() == n && (turn == Turn::Ccw
                                       ? B.in_arc(r.points.back(), prev, *x1, true, false)
                                       : B.in_arc(r.points.back(), *x1, next, false, true));
    if (ok) return r;
    if (failed_runs) failed_runs->push_back(std::move(r));
    return std::nullopt;
  };
  if (B.in_arc(*x1, prev, pi, false, true))
    if (auto r = attempt(Turn::Ccw)) return r;
  if (B.in_arc(*x1, pi, next, true, false))
    if (auto r = attempt(Turn::Cw)) return r;
  return std::nullopt;
}

std::optional<VestibuleCertificate> vestibule_test(const Polygon& P, const Polygon& Pp,
                                                   RejectionRecord* rejected) {
  const Boundary B(P);
  const std::size_t n = P.size();
  bool touches = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!B.on_boundary(Pp[i])) continue;
    touches = true;
    const PushOut identity{i, (i + n - 1) % n, Pp[i]};
    std::vector<BlcResult> runs;
    if (auto r = threshold_test(P, Pp, i, &runs)) return VestibuleCertificate{identity, {i, *r}};
    if (rejected)
      rejected->attempts.push_back(
          {identity, std::move(runs), is_convex_ccw(Pp) ? "broken line test failed" : "not convex CCW"});
  }
  if (touches) return std::nullopt;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t pusher : {(i + n - 1) % n, (i + 1) % n}) {
      if (Pp[pusher] == Pp[i]) continue;  // double point: no push direction
      const PushOut m{i, pusher, B.realize(ray_polygon_exit(Ray(Pp[pusher], Pp[i] - Pp[pusher]), B))};
      const Polygon bar = apply_pushout(Pp, m);
      std::vector<BlcResult> runs;
      if (is_convex_ccw(bar)) {
        if (auto r = threshold_test(P, bar, i, &runs)) return VestibuleCertificate{m, {i, *r}};
      }
      if (rejected)
        rejected->attempts.push_back(
            {m, std::move(runs), is_convex_ccw(bar) ? "broken line test failed" : "not convex CCW"});
    }
  }
  return std::nullopt;
}

namespace {

void require_verified(const PlanOutcome& plan, const Polygon& Pp) {
  if (!verify_script(plan.script, Pp).ok) throw std::logic_error("plan failed verification");
}

PlanOutcome remap(const PlanOutcome& plan, const std::vector<std::size_t>& sigma, const Polygon& P,
                  const Polygon& Pp) {
  PlanOutcome out{{P, {}}, plan.bound_class, std::nullopt};
  for (const PullIn& m : plan.script.moves)
    out.script.moves.push_back({sigma[m.mover], sigma[m.target], m.c});
  require_verified(out, Pp);
  out.intermediate_polygons = trace(out.script);
  return out;
}

}  // namespace

Verdict decide(const Polygon& P, const Polygon& Pp, bool plan_moves) {
  if (P.size() != Pp.size()) throw std::invalid_argument("vertex count mismatch");
  if (!co_contains(P, Pp)) throw std::invalid_argument("containment violated");
  const std::size_t n = P.size();
  Verdict v;
  v.sigma.resize(n);
  std::iota(v.sigma.begin(), v.sigma.end(), std::size_t{0});

  if (!is_set_convex(P)) {
    DegeneracyVerdict dv = is_degenerate(P, Pp);
    v.status = Status::AttainableDegenerate;
    if (plan_moves) v.plan = plan_degenerate(P, Pp, *dv.witness);
    v.certificate = std::move(dv);
    return v;
  }

  const Canonical c = *canonicalize_ccw(P);
  v.sigma = c.sigma;
  std::vector<Point> pp;
  for (std::size_t k = 0; k < n; ++k) pp.push_back(Pp[c.sigma[k]]);
  const Polygon& Pc = c.polygon;
  const Polygon Ppc(std::move(pp));

  DegeneracyVerdict dv = is_degenerate(Pc, Ppc);
  if (dv.degenerate) {
    v.status = Status::AttainableDegenerate;
    if (plan_moves) v.plan = remap(plan_degenerate(Pc, Ppc, *dv.witness), c.sigma, P, Pp);
    v.certificate = std::move(dv);
    return v;
  }

  RejectionRecord rejected;
  if (auto cert = vestibule_test(Pc, Ppc, &rejected)) {
    v.status = Status::AttainableVestibule;
    if (plan_moves) {
      const Polygon bar = apply_pushout(Ppc, cert->pushout);
      const PlanOutcome t = plan_threshold(Pc, bar, cert->threshold.vertex, cert->threshold.blc);
      v.plan = remap(plan_vestibule(Pc, Ppc, cert->pushout, t), c.sigma, P, Pp);
    }
    v.certificate = std::move(*cert);
    return v;
  }
  v.status = n == 3 ? Status::UnknownN3 : Status::Unattainable;
  v.certificate = std::move(rejected);
  return v;
}

}  // namespace polyattain
