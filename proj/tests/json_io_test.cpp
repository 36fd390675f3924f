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

#include <gtest/gtest.h>

#include "geomech/generators.hpp"
#include "geomech/json_io.hpp"

namespace geomech::json {
namespace {

TEST(Graph, RoundTrip) {
  const Dag g = witness_graph();
  const Json doc = graph(g);
  EXPECT_EQ(doc.dump(), R"({"n":7,"edges":[[2,1],[3,2],[4,2],[5,1],[6,5],[7,3]]})");
  EXPECT_EQ(parse_graph(doc), g);
  EXPECT_EQ(parse_graph(Json::parse(doc.dump())), g);
}

TEST(Graph, SchemaErrors) {
  EXPECT_THROW(parse_graph(Json::parse(R"({"edges":[]})")), SchemaError);
  EXPECT_THROW(parse_graph(Json::parse(R"({"n":-1,"edges":[]})")), SchemaError);
  EXPECT_THROW(parse_graph(Json::parse(R"({"n":3,"edges":[[1]]})")), SchemaError);
  EXPECT_THROW(parse_graph(Json::parse(R"({"n":3,"edges":[["2",1]]})")), SchemaError);
  EXPECT_THROW(parse_graph(Json::parse("[1,2]")), SchemaError);
  EXPECT_THROW(parse_graph(Json::parse(R"({"n":2,"edges":[[1,2],[2,1]]})")), GraphError);
}

TEST(Distribution, ExactAndFloat) {
  const Dag g = two_leader_graph();
  const Json doc = distribution(geometric(g));
  EXPECT_EQ(doc["probabilities"]["1"], "1/4");
  EXPECT_EQ(doc["probabilities"]["2"], "1/2");
  EXPECT_EQ(doc["probabilities"]["3"], "0");
  EXPECT_EQ(doc["probabilities_float"]["2"].get<double>(), 0.5);
  EXPECT_EQ(doc["abstain"], "1/4");
  EXPECT_EQ(doc["abstain_float"].get<double>(), 0.25);
}

TEST(Ratio, Fields) {
  const Dag g = two_leader_graph();
  const Json doc = ratio(expected_ratio(g, geometric(g)));
  EXPECT_EQ(doc["expected_progeny"], "5");
  EXPECT_EQ(doc["max_progeny"], 8);
  EXPECT_EQ(doc["ratio"], "5/8");
  EXPECT_EQ(doc["ratio_float"].get<double>(), 0.625);
}

TEST(Influential, Members) {
  EXPECT_EQ(influential(influential_set(witness_graph())).dump(),
            R"([{"agent":1,"progeny":7},{"agent":2,"progeny":4}])");
}

TEST(IcViolationDoc, RoundTrip) {
  const Dag g = witness_graph();
  const IcViolation v{Agent{2}, Rational(0), {}, Rational(1)};
  const Json doc = ic_violation("optimal-non-ic", g, v);
  EXPECT_EQ(doc["kind"], "ic-violation");
  EXPECT_EQ(doc["truthful_prob"], "0");
  EXPECT_EQ(doc["misreport_prob"], "1");
  EXPECT_EQ(doc["hidden"].dump(), "[[2,1]]");
  const ReplayIc back = parse_ic_violation(Json::parse(doc.dump()));
  EXPECT_EQ(back.mechanism, "optimal-non-ic");
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.violation.agent, Agent{2});
  EXPECT_TRUE(back.violation.misreport.empty());
  EXPECT_EQ(back.violation.truthful_prob, 0);
  EXPECT_EQ(back.violation.misreport_prob, 1);

  const IcViolation partial{Agent{4}, Rational(1, 8), {Agent{1}, Agent{3}}, Rational(3, 16)};
  const ReplayIc back2 = parse_ic_violation(ic_violation("geometric", chain(4), partial));
  EXPECT_EQ(back2.violation.misreport, (std::vector<Agent>{Agent{1}, Agent{3}}));
  EXPECT_EQ(back2.violation.misreport_prob, Rational(3, 16));
}

TEST(IcViolationDoc, SchemaErrors) {
  Json doc = ic_violation("geometric", chain(3), IcViolation{Agent{2}, 0, {}, 1});
  Json wrong_kind = doc;
  wrong_kind["kind"] = "fairness-violation";
  EXPECT_THROW(parse_ic_violation(wrong_kind), SchemaError);
  Json bad_prob = doc;
  bad_prob["misreport_prob"] = "one half";
  EXPECT_THROW(parse_ic_violation(bad_prob), SchemaError);
  Json numeric_prob = doc;
  numeric_prob["misreport_prob"] = 0.5;
  EXPECT_THROW(parse_ic_violation(numeric_prob), SchemaError);
  Json bad_mech = doc;
  bad_mech["mechanism"] = 7;
  EXPECT_THROW(parse_ic_violation(bad_mech), SchemaError);
  Json bad_misreport = doc;
  bad_misreport["misreport"] = Json::array({"x"});
  EXPECT_THROW(parse_ic_violation(bad_misreport), SchemaError);
  Json missing = doc;
  missing.erase("agent");
  EXPECT_THROW(parse_ic_violation(missing), SchemaError);
}

TEST(FairnessViolationDoc, RoundTrip) {
  const Dag base = parse_edge_list("7\n2 1\n3 1\n4 1\n6 5\n7 6\n");
  const Dag mutated = parse_edge_list("7\n2 1\n3 1\n4 1\n6 5\n");
  const FairnessFailure failure{{base, mutated, Agent{1}}, {Rational(1, 5), Rational(1, 4)}};
  const Json doc = fairness_violation("edge-count", failure);
  EXPECT_EQ(doc["kind"], "fairness-violation");
  EXPECT_EQ(doc["pivot"], 1);
  const ReplayFairness back = parse_fairness_violation(Json::parse(doc.dump()));
  EXPECT_EQ(back.mechanism, "edge-count");
  EXPECT_EQ(back.sample.base, base);
  EXPECT_EQ(back.sample.mutated, mutated);
  EXPECT_EQ(back.sample.pivot, Agent{1});
  EXPECT_EQ(back.recorded.base_prob, Rational(1, 5));
  EXPECT_EQ(back.recorded.mutated_prob, Rational(1, 4));
  EXPECT_FALSE(back.recorded.fair());

  EXPECT_THROW(parse_fairness_violation(ic_violation("geometric", base, IcViolation{Agent{2}, 0, {}, 1})),
               SchemaError);
}

}  // namespace
}  // namespace geomech::json
