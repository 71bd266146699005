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

#include "polyattain/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace polyattain {

Rat rat_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? Rat(j.get<std::uint64_t>()) : Rat(j.get<std::int64_t>());
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or \"a/b\" string, got " + j.dump());
}

json rat_to_json(const Rat& r) { return to_string(r); }

json point_to_json(const Point& p) { return json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

json points_to_json(std::span<const Point> pts) {
  json a = json::array();
  for (const Point& p : pts) a.push_back(point_to_json(p));
  return a;
}

std::vector<Point> points_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of points");
  std::vector<Point> pts;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) throw InputError(at + ": expected [x, y]");
    pts.push_back({rat_from_json(j[k][0], at + "[0]"), rat_from_json(j[k][1], at + "[1]")});
  }
  return pts;
}

namespace {

Polygon polygon_from_json(const json& j, const std::string& where) {
  std::vector<Point> pts = points_from_json(j, where);
  if (pts.size() < 3) throw InputError(where + ": need at least 3 vertices");
  return Polygon(std::move(pts));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Instance parse_instance(const json& j) {
  std::vector<Point> p = points_from_json(field(j, "P"), "P");
  std::vector<Point> q = points_from_json(field(j, "Pprime"), "Pprime");
  if (p.size() != q.size()) throw InputError("vertex count mismatch");
  if (p.size() < 3) throw InputError("P: need at least 3 vertices");
  Instance inst{Polygon(std::move(p)), Polygon(std::move(q)), "", std::nullopt};
  if (!co_contains(inst.P, inst.Pprime)) throw InputError("containment violated");
  if (j.contains("name") && j["name"].is_string()) inst.name = j["name"].get<std::string>();
  if (j.contains("seed") && j["seed"].is_number_unsigned()) inst.seed = j["seed"].get<std::uint64_t>();
  return inst;
}

json instance_to_json(const Instance& inst) {
  json j;
  j["P"] = points_to_json(inst.P.vertices());
  j["Pprime"] = points_to_json(inst.Pprime.vertices());
  if (!inst.name.empty()) j["name"] = inst.name;
  if (inst.seed) j["seed"] = *inst.seed;
  return j;
}

MoveScript parse_script(const json& j) {
  MoveScript s{polygon_from_json(field(j, "start"), "start"), {}};
  const json& moves = field(j, "moves");
  if (!moves.is_array()) throw InputError("moves: expected an array");
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const std::string at = "moves[" + std::to_string(k) + "]";
    const json& m = moves[k];
    auto index = [&](const char* key) {
      if (!m.is_object() || !m.contains(key) || !m[key].is_number_integer() || m[key].get<std::int64_t>() < 1)
        throw InputError(at + "." + key + ": expected a 1-based vertex index");
      return static_cast<std::size_t>(m[key].get<std::int64_t>() - 1);
    };
    const std::size_t i = index("i"), jj = index("j");
    if (!m.contains("c")) throw InputError(at + ".c: missing");
    s.moves.push_back({i, jj, rat_from_json(m["c"], at + ".c")});
  }
  return s;
}

json script_to_json(const MoveScript& s, bool decimal) {
  json moves = json::array();
  for (const PullIn& m : s.moves) {
    json jm{{"i", m.mover + 1}, {"j", m.target + 1}, {"c", rat_to_json(m.c)}};
    if (decimal) jm["c_approx"] = to_double(m.c);
    moves.push_back(std::move(jm));
  }
  return {{"start", points_to_json(s.start.vertices())}, {"moves", std::move(moves)}};
}

json matrix_to_json(const StochasticMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json factorization_to_json(const MoveScript& s, bool full_factors) {
  const MatrixFactorization f = script_to_matrix(s);
  json factors = json::array();
  for (std::size_t k = 0; k < s.moves.size(); ++k) {
    const PullIn& m = s.moves[k];
    json jf{{"i", m.mover + 1}, {"j", m.target + 1}, {"c", rat_to_json(m.c)}};
    if (full_factors) jf["matrix"] = matrix_to_json(f.factors[k]);
    factors.push_back(std::move(jf));
  }
  return {{"factors", std::move(factors)},
          {"order", "product = K_m ... K_2 K_1; end = product * start"},
          {"product", matrix_to_json(f.product)}};
}

json blc_to_json(const BlcResult& r, const Boundary& b) {
  json pts = json::array(), bps = json::array();
  for (const BoundaryPoint& x : r.points) {
    pts.push_back(point_to_json(b.realize(x)));
    bps.push_back(std::to_string(x.edge + 1) + ":" + to_string(x.t));
  }
  return {{"turn", r.turn == Turn::Ccw ? "ccw" : "cw"},
          {"l", r.l()},
          {"points", std::move(pts)},
          {"boundary_coordinates", std::move(bps)},
          {"pivots", points_to_json(r.pivots)},
          {"stop_image", point_to_json(b.realize(r.stop_image))}};
}

namespace {

json pushout_to_json(const PushOut& m, const std::vector<std::size_t>& sigma) {
  return {{"mover", sigma[m.mover] + 1}, {"pusher", sigma[m.pusher] + 1},
          {"landing", point_to_json(m.landing)}};
}

json certificate_to_json(const Verdict& v, const Instance& inst) {
  const std::vector<std::size_t>& sigma = v.sigma;
  if (const auto* d = std::get_if<DegeneracyVerdict>(&v.certificate)) {
    json j{{"kind", "degeneracy"}, {"reason", to_string(d->reason)}};
    if (d->witness) j["witness"] = points_to_json(*d->witness);
    if (d->start) j["start"] = point_to_json(*d->start);
    return j;
  }
  std::vector<Point> canon;
  for (std::size_t k = 0; k < sigma.size(); ++k) canon.push_back(inst.P[sigma[k]]);
  const Boundary b{Polygon(canon)};
  if (const auto* c = std::get_if<VestibuleCertificate>(&v.certificate)) {
    return {{"kind", "vestibule"},
            {"pushout", pushout_to_json(c->pushout, sigma)},
            {"identity_pushout", c->pushout.landing == inst.Pprime[sigma[c->pushout.mover]]},
            {"threshold_vertex", sigma[c->threshold.vertex] + 1},
            {"blc", blc_to_json(c->threshold.blc, b)}};
  }
  const auto& r = std::get<RejectionRecord>(v.certificate);
  json attempts = json::array();
  for (const auto& a : r.attempts) {
    json runs = json::array();
    for (const BlcResult& run : a.runs) runs.push_back(blc_to_json(run, b));
    attempts.push_back({{"pushout", pushout_to_json(a.pushout, sigma)},
                        {"reason", a.reason},
                        {"runs", std::move(runs)}});
  }
  return {{"kind", "rejection"}, {"attempts", std::move(attempts)}};
}

}  // namespace

json report_to_json(const Verdict& v, const Instance& inst, const ReportOptions& opt,
                    double elapsed_ms) {
  json j{{"verdict", to_string(v.status)},
         {"n", inst.P.size()},
         {"certificate", certificate_to_json(v, inst)},
         {"timings", {{"decide_ms", elapsed_ms}}}};
  if (!inst.name.empty()) j["name"] = inst.name;
  if (v.plan) {
    j["bound_class"] = to_string(v.plan->bound_class);
    j["moves"] = v.plan->script.moves.size();
    j["verified"] = verify_script(v.plan->script, inst.Pprime).ok;
    if (opt.plan) j["script"] = script_to_json(v.plan->script, opt.decimal);
    if (opt.matrix) j["matrix"] = factorization_to_json(v.plan->script, false);
  }
  if (opt.decimal) j["note"] = "fields ending in _approx are approximate and non-authoritative";
  return j;
}

std::string report_to_text(const Verdict& v, const Instance& inst, const ReportOptions& opt) {
  std::ostringstream os;
  if (!inst.name.empty()) os << "instance: " << inst.name << "\n";
  os << "verdict: " << to_string(v.status) << "\n";
  if (const auto* d = std::get_if<DegeneracyVerdict>(&v.certificate)) {
    os << "reason: " << to_string(d->reason) << "\n";
    if (d->witness) {
      os << "witness:";
      for (const Point& p : *d->witness) os << ' ' << p;
      os << "\n";
    }
  } else if (const auto* c = std::get_if<VestibuleCertificate>(&v.certificate)) {
    os << "push-out: vertex " << v.sigma[c->pushout.mover] + 1 << " by " << v.sigma[c->pushout.pusher] + 1
       << " onto " << c->pushout.landing << "\n";
    os << "threshold broken line (" << (c->threshold.blc.turn == Turn::Ccw ? "ccw" : "cw")
       << "), l = " << c->threshold.blc.l() << "\n";
  } else {
    os << "rejected push-outs: " << std::get<RejectionRecord>(v.certificate).attempts.size() << "\n";
  }
  if (v.plan) {
    os << "plan: " << v.plan->script.moves.size() << " moves, bound " << to_string(v.plan->bound_class)
       << ", verified " << (verify_script(v.plan->script, inst.Pprime).ok ? "yes" : "NO") << "\n";
    if (opt.plan)
      for (const PullIn& m : v.plan->script.moves) {
        os << "  pull " << m.mover + 1 << " toward " << m.target + 1 << " c=" << to_string(m.c);
        if (opt.decimal) os << " (~" << std::setprecision(6) << to_double(m.c) << ")";
        os << "\n";
      }
    if (opt.matrix) {
      const StochasticMatrix d = script_to_matrix(v.plan->script).product;
      os << "product matrix:\n";
      for (Eigen::Index r = 0; r < d.rows(); ++r) {
        os << " ";
        for (Eigen::Index c = 0; c < d.cols(); ++c) os << ' ' << to_string(d(r, c));
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string render_svg(const Boundary& P, const Polygon& Pprime, const std::vector<BlcResult>& runs) {
  const auto verts = P.polygon().vertices();
  Rat minx = verts[0].x, maxx = verts[0].x, miny = verts[0].y, maxy = verts[0].y;
  for (const Point& p : verts) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  const Rat span = std::max(maxx - minx, maxy - miny);
  const Rat s = Rat(720) / span;
  auto X = [&](const Point& p) { return to_double(40 + s * (p.x - minx)); };
  auto Y = [&](const Point& p) { return to_double(760 - s * (p.y - miny)); };
  auto coords = [&](std::span<const Point> pts) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << X(pts[k]) << ',' << Y(pts[k]);
    return os.str();
  };

  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
     << "<!-- affine map: X = 40 + s*(x - " << to_string(minx) << "), Y = 760 - s*(y - "
     << to_string(miny) << "), s = " << to_string(s) << " -->\n"
     << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
     << "<polygon id=\"P\" points=\"" << coords(verts)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
     << "<polygon id=\"Pprime\" points=\"" << coords(Pprime.vertices())
     << "\" fill=\"#dddddd\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  static const char* colors[] = {"#c0392b", "#2471a3", "#229954", "#7d3c98"};
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::vector<Point> pts;
    for (const BoundaryPoint& b : runs[r].points) pts.push_back(P.realize(b));
    const char* color = colors[r % 4];
    os << "<polyline id=\"blc" << r + 1 << "\" points=\"" << coords(pts) << "\" fill=\"none\" stroke=\""
       << color << "\" stroke-width=\"1.5\"/>\n";
    for (std::size_t k = 0; k < pts.size(); ++k)
      os << "<circle cx=\"" << X(pts[k]) << "\" cy=\"" << Y(pts[k]) << "\" r=\"3\" fill=\"" << color
         << "\"/><text x=\"" << X(pts[k]) + 6 << "\" y=\"" << Y(pts[k]) - 6
         << "\" font-size=\"14\" font-family=\"serif\">x" << k + 1 << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polyattain
