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

#include "geomech/json_io.hpp"

#include <algorithm>

namespace geomech::json {

namespace {

void put_rational(Json& obj, const std::string& key, const Rational& value) {
  obj[key] = to_string(value);
  obj[key + "_float"] = to_double(value);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string string_field(const Json& doc, const char* key) {
  const Json& value = field(doc, key);
  if (!value.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return value.get<std::string>();
}

Rational rational_field(const Json& doc, const char* key) {
  const Json& value = field(doc, key);
  if (!value.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::runtime_error& err) {
    throw SchemaError(err.what());
  }
}

Agent agent_field(const Json& doc, const char* key) {
  const Json& value = field(doc, key);
  if (!value.is_number_unsigned()) throw SchemaError(std::string("field '") + key + "' must be an agent id");
  return Agent{value.get<std::uint32_t>()};
}

}  // namespace

Json graph(const Dag& dag) {
  Json edges = Json::array();
  for (const Edge& e : dag.edges()) edges.push_back({e.follower.id, e.followee.id});
  return Json{{"n", dag.size()}, {"edges", std::move(edges)}};
}

Dag parse_graph(const Json& doc) {
  const Json& n = field(doc, "n");
  const Json& edges = field(doc, "edges");
  if (!n.is_number_unsigned() || !edges.is_array()) {
    throw SchemaError("graph needs unsigned 'n' and array 'edges'");
  }
  std::vector<Edge> parsed;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw SchemaError("each edge must be [follower, followee]");
    }
    parsed.push_back({Agent{e[0].get<std::uint32_t>()}, Agent{e[1].get<std::uint32_t>()}});
  }
  return Dag::from_edges(n.get<std::size_t>(), std::move(parsed));
}

Json distribution(const SelectionDistribution& dist) {
  Json exact = Json::object();
  Json floats = Json::object();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::string key = std::to_string(i + 1);
    const Rational& p = dist.prob(Agent::from_index(i));
    exact[key] = to_string(p);
    floats[key] = to_double(p);
  }
  Json doc{{"probabilities", std::move(exact)}, {"probabilities_float", std::move(floats)}};
  put_rational(doc, "abstain", dist.abstain());
  return doc;
}

Json influential(const InfluentialSet& set) {
  Json members = Json::array();
  for (const auto& m : set.members) {
    members.push_back({{"agent", m.agent.id}, {"progeny", m.progeny}});
  }
  return members;
}

Json ratio(const RatioReport& report) {
  Json doc = Json::object();
  put_rational(doc, "expected_progeny", report.expected_progeny);
  doc["max_progeny"] = report.max_progeny;
  put_rational(doc, "ratio", report.ratio);
  return doc;
}

Json ic_violation(std::string_view mechanism, const Dag& dag,
                  const IcViolation& violation) {
  Json misreport = Json::array();
  for (Agent a : violation.misreport) misreport.push_back(a.id);
  Json doc{{"kind", "ic-violation"},
           {"mechanism", mechanism},
           {"graph", graph(dag)},
           {"agent", violation.agent.id},
           {"misreport", std::move(misreport)}};
  Json hidden = Json::array();
  for (const Edge& e : dag.out_edges(violation.agent)) {
    if (std::find(violation.misreport.begin(), violation.misreport.end(), e.followee) ==
        violation.misreport.end()) {
      hidden.push_back({e.follower.id, e.followee.id});
    }
  }
  doc["hidden"] = std::move(hidden);
  put_rational(doc, "truthful_prob", violation.truthful_prob);
  put_rational(doc, "misreport_prob", violation.misreport_prob);
  return doc;
}

Json fairness_violation(std::string_view mechanism, const FairnessFailure& failure) {
  Json doc{{"kind", "fairness-violation"},
           {"mechanism", mechanism},
           {"pivot", failure.sample.pivot.id},
           {"base", graph(failure.sample.base)},
           {"mutated", graph(failure.sample.mutated)}};
  put_rational(doc, "base_prob", failure.check.base_prob);
  put_rational(doc, "mutated_prob", failure.check.mutated_prob);
  return doc;
}

ReplayIc parse_ic_violation(const Json& doc) {
  if (field(doc, "kind") != "ic-violation") throw SchemaError("not an ic-violation document");
  const Json& misreport = field(doc, "misreport");
  if (!misreport.is_array()) throw SchemaError("'misreport' must be an array");
  IcViolation violation{agent_field(doc, "agent"), rational_field(doc, "truthful_prob"), {},
                        rational_field(doc, "misreport_prob")};
  for (const Json& a : misreport) {
    if (!a.is_number_unsigned()) throw SchemaError("misreport entries must be agent ids");
    violation.misreport.push_back(Agent{a.get<std::uint32_t>()});
  }
  return {string_field(doc, "mechanism"), parse_graph(field(doc, "graph")),
          std::move(violation)};
}

ReplayFairness parse_fairness_violation(const Json& doc) {
  if (field(doc, "kind") != "fairness-violation") {
    throw SchemaError("not a fairness-violation document");
  }
  return {string_field(doc, "mechanism"),
          FairnessSample{parse_graph(field(doc, "base")), parse_graph(field(doc, "mutated")),
                         agent_field(doc, "pivot")},
          FairnessCheck{rational_field(doc, "base_prob"), rational_field(doc, "mutated_prob")}};
}

}  // namespace geomech::json
