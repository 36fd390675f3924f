// Copyright 2026 The geomech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encodings shared by the CLI and its replay files. Rationals appear as
// "p/q" strings with a companion "<name>_float" number.

#include <string>
#include <string_view>

#include "json.hpp"

#include "geomech/bounds.hpp"
#include "geomech/dag.hpp"
#include "geomech/influence.hpp"
#include "geomech/mechanisms.hpp"
#include "geomech/verification.hpp"

namespace geomech::json {

using Json = nlohmann::ordered_json;

/// Thrown when a replay or report document does not match the schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json graph(const Dag& dag);
Dag parse_graph(const Json& doc);

Json distribution(const SelectionDistribution& dist);
Json influential(const InfluentialSet& set);
Json ratio(const RatioReport& report);

/// {"kind": "ic-violation", "mechanism", "graph", "agent", "misreport",
///  "hidden", "truthful_prob", "misreport_prob"}. "hidden" lists the agent's
/// true out-edges left out of the misreport and is informational only.
Json ic_violation(std::string_view mechanism, const Dag& dag,
                  const IcViolation& violation);

/// {"kind": "fairness-violation", "mechanism", "pivot", "base", "mutated",
///  "base_prob", "mutated_prob"}
Json fairness_violation(std::string_view mechanism, const FairnessFailure& failure);

struct ReplayIc {
  std::string mechanism;
  Dag graph;
  IcViolation violation;
};

struct ReplayFairness {
  std::string mechanism;
  FairnessSample sample;
  FairnessCheck recorded;
};

ReplayIc parse_ic_violation(const Json& doc);
ReplayFairness parse_fairness_violation(const Json& doc);

}  // namespace geomech::json
