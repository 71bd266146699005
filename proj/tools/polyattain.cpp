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

// polyattain: command-line front end.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <atomic>

#include "CLI11.hpp"
#include "polyattain/generate.hpp"

using namespace polyattain;

namespace {

constexpr int kExitMalformed = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

Boundary boundary_of(const Instance& inst) {
  if (!is_convex_ccw(inst.P)) throw InputError("P must be convex and counterclockwise here");
  return Boundary(inst.P);
}

BoundaryPoint parse_start(const Boundary& b, const std::string& edge_t, const std::string& at) {
  if (!at.empty()) {
    const auto comma = at.find(',');
    if (comma == std::string::npos) throw InputError("--at: expected x,y");
    const Point q{parse_rat(at.substr(0, comma)), parse_rat(at.substr(comma + 1))};
    const auto loc = b.locate(q);
    if (!loc) throw InputError("--at: start not on the boundary of P");
    return *loc;
  }
  const auto colon = edge_t.find(':');
  if (colon == std::string::npos) throw InputError("--start: expected edge:t");
  const long edge = std::stol(edge_t.substr(0, colon));
  const Rat t = parse_rat(edge_t.substr(colon + 1));
  if (edge < 1 || static_cast<std::size_t>(edge) > b.size() || t < 0 || t > 1)
    throw InputError("--start: start not on the boundary of P");
  return b.at(static_cast<std::size_t>(edge - 1), t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact attainability of polygons under pull-in moves"};
  app.require_subcommand(1);

  // decide
  std::vector<std::string> decide_files;
  bool want_plan = false, want_matrix = false, want_text = false, want_json = false, decimal = false;
  unsigned jobs = 1;
  auto* decide_cmd = app.add_subcommand("decide", "Decide attainability of Pprime from P");
  decide_cmd->add_option("instances", decide_files, "Instance JSON files")->required();
  decide_cmd->add_flag("--plan", want_plan, "Include the verified move script");
  decide_cmd->add_flag("--matrix", want_matrix, "Include the stochastic matrix factorization");
  decide_cmd->add_flag("--json", want_json, "JSON output (default)");
  decide_cmd->add_flag("--text", want_text, "Human-readable output");
  decide_cmd->add_flag("--decimal", decimal, "Add approximate decimals (non-authoritative)");
  decide_cmd->add_option("--jobs", jobs, "Instances decided in parallel")->check(CLI::PositiveNumber);

  // blc
  std::string blc_file, blc_start = "1:0", blc_at, blc_svg;
  bool blc_cw = false;
  auto* blc_cmd = app.add_subcommand("blc", "Run the broken line construction");
  blc_cmd->add_option("instance", blc_file)->required();
  blc_cmd->add_option("--start", blc_start, "Start as edge:t, edge 1-based, point (1-t)p_e + t p_{e+1}");
  blc_cmd->add_option("--at", blc_at, "Start as a boundary point x,y");
  blc_cmd->add_flag("--cw", blc_cw, "Clockwise construction");
  blc_cmd->add_option("--svg", blc_svg, "Write an SVG drawing");

  // degeneracy
  std::string deg_file;
  auto* deg_cmd = app.add_subcommand("degeneracy", "Test for degenerate containment");
  deg_cmd->add_option("instance", deg_file)->required();

  // plan
  std::string plan_file, plan_out;
  auto* plan_cmd = app.add_subcommand("plan", "Write a verified pull-in script from P to Pprime");
  plan_cmd->add_option("instance", plan_file)->required();
  plan_cmd->add_option("-o,--output", plan_out, "Script file (default stdout)");

  // verify
  std::string ver_inst, ver_script;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a script from P and compare with Pprime");
  verify_cmd->add_option("instance", ver_inst)->required();
  verify_cmd->add_option("script", ver_script)->required();

  // matrix
  std::string mat_script;
  bool mat_full = false;
  auto* matrix_cmd = app.add_subcommand("matrix", "Elementary stochastic factorization of a script");
  matrix_cmd->add_option("script", mat_script)->required();
  matrix_cmd->add_flag("--full", mat_full, "Print every factor matrix");

  // gen
  std::size_t gen_n = 5;
  std::uint64_t gen_seed = 1;
  std::string gen_mode = "random", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->check(CLI::Range(3, 64));
  gen_cmd->add_option("--seed", gen_seed, "Seed (POLYATTAIN_SEED overrides)");
  gen_cmd->add_option("--mode", gen_mode, "random | scripted | degenerate")
      ->check(CLI::IsMember({"random", "scripted", "degenerate"}));
  gen_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*decide_cmd) {
      const ReportOptions opt{want_plan, want_matrix, decimal};
      std::vector<Instance> insts;
      for (const auto& f : decide_files) insts.push_back(load_instance(f));
      std::vector<std::string> out(insts.size());
      std::vector<json> reports(insts.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k; (k = next++) < insts.size();) {
          const auto t0 = std::chrono::steady_clock::now();
          const Verdict v = decide(insts[k].P, insts[k].Pprime, true);
          const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
          if (want_text) out[k] = report_to_text(v, insts[k], opt);
          else reports[k] = report_to_json(v, insts[k], opt, ms);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < std::min<std::size_t>(jobs, insts.size()); ++t) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
      if (want_text) {
        for (std::size_t k = 0; k < out.size(); ++k) std::cout << (k ? "\n" : "") << out[k];
      } else {
        std::cout << (reports.size() == 1 ? reports[0] : json(reports)).dump(2) << "\n";
      }
      return 0;
    }

    if (*blc_cmd) {
      const Instance inst = load_instance(blc_file);
      const Boundary b = boundary_of(inst);
      const BoundaryPoint x = parse_start(b, blc_start, blc_at);
      const PonceletMap map(b, inst.Pprime);
      const BlcResult r = blc(map, x, blc_cw ? Turn::Cw : Turn::Ccw);
      json j = blc_to_json(r, b);
      j["stop_reason"] = "image of the last point is outside the open arc back to the start";
      std::cout << j.dump(2) << "\n";
      if (!blc_svg.empty()) write_output(blc_svg, render_svg(b, inst.Pprime, {r}));
      return 0;
    }

    if (*deg_cmd) {
      const Instance inst = load_instance(deg_file);
      const DegeneracyVerdict d = is_degenerate(inst.P, inst.Pprime);
      json j{{"degenerate", d.degenerate}, {"reason", to_string(d.reason)}};
      if (d.witness) {
        j["witness"] = points_to_json(*d.witness);
        j["witness_certified"] = certifies_degeneracy(inst.P, inst.Pprime, *d.witness);
      }
      if (d.start) j["start"] = point_to_json(*d.start);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*plan_cmd) {
      const Instance inst = load_instance(plan_file);
      const Verdict v = decide(inst.P, inst.Pprime, true);
      if (!v.plan) {
        std::cerr << "no plan: verdict " << to_string(v.status) << "\n";
        return 1;
      }
      write_output(plan_out, script_to_json(v.plan->script).dump(2) + "\n");
      std::cerr << to_string(v.status) << ": " << v.plan->script.moves.size() << " moves ("
                << to_string(v.plan->bound_class) << ")\n";
      return 0;
    }

    if (*verify_cmd) {
      const Instance inst = load_instance(ver_inst);
      MoveScript s = [&] {
        try {
          return parse_script(read_json(ver_script));
        } catch (const InputError& e) {
          throw InputError(ver_script + ": " + e.what());
        }
      }();
      if (s.start != inst.P) {
        std::cout << "FAIL: script start differs from P\n";
        return 1;
      }
      const VerifyReport r = verify_script(s, inst.Pprime);
      std::cout << (r.ok ? "PASS" : "FAIL: " + r.message) << "\n";
      return r.ok ? 0 : 1;
    }

    if (*matrix_cmd) {
      const MoveScript s = parse_script(read_json(mat_script));
      const VerifyReport r = verify_script(s, apply_script(s));
      if (!r.ok) throw InputError(mat_script + ": " + r.message);
      std::cout << factorization_to_json(s, mat_full).dump(2) << "\n";
      return 0;
    }

    if (*gen_cmd) {
      if (const char* env = std::getenv("POLYATTAIN_SEED")) gen_seed = std::stoull(env);
      const Instance inst = generate(gen_n, gen_seed, *parse_gen_mode(gen_mode));
      write_output(gen_out, instance_to_json(inst).dump(2) + "\n");
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
