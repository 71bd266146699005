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
#include <variant>
#include <vector>

#include "polyattain/degeneracy.hpp"
#include "polyattain/planners.hpp"

namespace polyattain {

enum class Status { AttainableDegenerate, AttainableVestibule, Unattainable, UnknownN3 };

const char* to_string(Status s);
inline bool attainable(Status s) {
  return s == Status::AttainableDegenerate || s == Status::AttainableVestibule;
}

struct ThresholdCertificate {
  std::size_t vertex = 0;
  BlcResult blc;
};

/// A push-out onto the boundary (the identity when the vertex is already
/// there) and the threshold certificate of its result.
struct VestibuleCertificate {
  PushOut pushout;
  ThresholdCertificate threshold;
};

struct RejectionRecord {
  struct Attempt {
    PushOut pushout;
    std::vector<BlcResult> runs;  // failing broken lines, empty if none ran
    std::string reason;
  };
  std::vector<Attempt> attempts;
};

struct Verdict {
  Status status = Status::Unattainable;
  /// Certificates refer to the canonical indexing below.
  std::variant<DegeneracyVerdict, VestibuleCertificate, RejectionRecord> certificate;
  std::optional<PlanOutcome> plan;  // in the caller's indexing
  /// canonical[k] = input[sigma[k]]; identity when P was not set-convex.
  std::vector<std::size_t> sigma;
};

/// Broken-line test for Pp (non-degenerate in P, convex CCW P) whose vertex
/// i is on the boundary. Throws std::invalid_argument when it is not.
std::optional<BlcResult> threshold_test(const Polygon& P, const Polygon& Pp, std::size_t i,
                                        std::vector<BlcResult>* failed_runs = nullptr);

/// Searches the boundary push-outs of neighbouring vertices for a member of
/// the threshold. P must be convex CCW and Pp non-degenerate in P.
std::optional<VestibuleCertificate> vestibule_test(const Polygon& P, const Polygon& Pp,
                                                   RejectionRecord* rejected = nullptr);

/// Full decision with verified plans. Throws std::invalid_argument on a
/// size mismatch or when Pp is not inside P.
Verdict decide(const Polygon& P, const Polygon& Pp, bool plan_moves = true);

}  // namespace polyattain
