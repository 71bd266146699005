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
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyattain/attainability.hpp"

namespace polyattain {

using json = nlohmann::json;

/// Malformed or inconsistent input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts "a/b" strings, integer strings and JSON integers; rejects floats.
Rat rat_from_json(const json& j, const std::string& where);
json rat_to_json(const Rat& r);
json point_to_json(const Point& p);
json points_to_json(std::span<const Point> pts);
std::vector<Point> points_from_json(const json& j, const std::string& where);

struct Instance {
  Polygon P, Pprime;
  std::string name;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InputError, including "vertex count mismatch" and
/// "containment violated".
Instance parse_instance(const json& j);
json instance_to_json(const Instance& inst);

/// Move indices are 1-based in JSON.
MoveScript parse_script(const json& j);
json script_to_json(const MoveScript& s, bool decimal = false);

json matrix_to_json(const StochasticMatrix& m);
json factorization_to_json(const MoveScript& s, bool full_factors);

json blc_to_json(const BlcResult& r, const Boundary& b);

struct ReportOptions {
  bool plan = false;
  bool matrix = false;
  bool decimal = false;
};

json report_to_json(const Verdict& v, const Instance& inst, const ReportOptions& opt,
                    double elapsed_ms);
std::string report_to_text(const Verdict& v, const Instance& inst, const ReportOptions& opt);

/// 800x800 drawing of P, Pprime and one polyline per construction. The
/// affine map from instance to picture coordinates is stated in a comment.
std::string render_svg(const Boundary& P, const Polygon& Pprime, const std::vector<BlcResult>& runs);

}  // namespace polyattain
