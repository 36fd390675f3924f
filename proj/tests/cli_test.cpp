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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string(GEOMECH_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(Select, ExampleOneRatio) {
  const CliResult r = run("select --family two-leader");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["ratio"], "5/8");
  EXPECT_EQ(doc["expected_progeny"], "5");
  EXPECT_EQ(doc["abstain"], "1/4");
  EXPECT_EQ(doc["meta"]["seed"], 0);
}

TEST(Select, SingleNode) {
  const CliResult r = run("select -i " + temp_file("single.txt", "1\n"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["probabilities"].dump(), R"({"1":"1/2"})");
  EXPECT_EQ(doc["abstain"], "1/2");
}

TEST(Select, CyclicInputIsInputError) {
  const CliResult r = run("select -i " + temp_file("cycle.txt", "2\n1 2\n2 1\n"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("cycle"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2 1"), std::string::npos) << r.out;
}

TEST(Select, MissingFileIsInputError) {
  EXPECT_EQ(run("select -i /nonexistent/graph.txt").exit_code, 2);
}

TEST(Select, UnknownMechanismIsConfigError) {
  const CliResult r = run("select --family witness --mechanism random-dictator");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.out.find("random-dictator"), std::string::npos);
  EXPECT_EQ(run("select --family witness --format yaml").exit_code, 3);
  EXPECT_EQ(run("select --family barabasi").exit_code, 3);
  EXPECT_EQ(run("select --no-such-flag").exit_code, 3);
}

TEST(Select, CsvAndText) {
  const CliResult csv = run("select --family two-leader --format csv");
  ASSERT_EQ(csv.exit_code, 0);
  EXPECT_NE(csv.out.find("seed=0"), std::string::npos);
  EXPECT_NE(csv.out.find("1,8,1,1/4,0.25\n"), std::string::npos) << csv.out;
  EXPECT_NE(csv.out.find("abstain,,,1/4,0.25\n"), std::string::npos);
  const CliResult text = run("select --family two-leader --format text");
  ASSERT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("ratio 5/8"), std::string::npos) << text.out;
}

TEST(Verify, GeometricIcOnEnsemble) {
  const CliResult r = run("verify ic --family gnp-dag --n 12 --p 0.3 --trials 60 --seed 11");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["violations"], 0);
  EXPECT_TRUE(doc["counterexample"].is_null());
  EXPECT_EQ(doc["scope"]["graphs"], 60);
  EXPECT_EQ(doc["scope"]["exhaustive"], true);
  EXPECT_EQ(doc["meta"]["seed"], 11);
}

TEST(Verify, OptimalNonIcCounterexampleReplays) {
  const std::string report = ::testing::TempDir() + "ic_report.json";
  const CliResult r = run("verify ic --family witness --mechanism optimal-non-ic -o " + report);
  ASSERT_EQ(r.exit_code, 1) << r.out;
  const Json doc = Json::parse(slurp(report));
  const Json& ce = doc["counterexample"];
  EXPECT_EQ(ce["agent"], 2);
  EXPECT_EQ(ce["hidden"].dump(), "[[2,1]]");
  EXPECT_EQ(ce["truthful_prob"], "0");
  EXPECT_EQ(ce["misreport_prob"], "1");

  const CliResult replay = run("verify --replay " + report);
  EXPECT_EQ(replay.exit_code, 1) << replay.out;
  EXPECT_EQ(Json::parse(replay.out)["replay"]["reproduced"], true);

  // The bare counterexample replays too.
  const std::string bare = temp_file("ic_bare.json", ce.dump());
  EXPECT_EQ(run("verify --replay " + bare).exit_code, 1);

  // Claiming the same deviation against the geometric mechanism does not reproduce.
  Json forged = ce;
  forged["mechanism"] = "geometric";
  const CliResult no = run("verify --replay " + temp_file("ic_forged.json", forged.dump()));
  EXPECT_EQ(no.exit_code, 0) << no.out;
  EXPECT_EQ(Json::parse(no.out)["replay"]["reproduced"], false);
}

TEST(Verify, ReplayErrors) {
  EXPECT_EQ(run("verify --replay " + temp_file("junk.json", "not json")).exit_code, 2);
  EXPECT_EQ(run("verify --replay " + temp_file("empty.json", R"({"counterexample":null})")).exit_code, 2);
  Json ce = {{"kind", "ic-violation"}, {"mechanism", "mystery"}, {"graph", {{"n", 1}, {"edges", Json::array()}}},
             {"agent", 1}, {"misreport", Json::array()}, {"truthful_prob", "0"}, {"misreport_prob", "1"}};
  EXPECT_EQ(run("verify --replay " + temp_file("mystery.json", ce.dump())).exit_code, 3);
}

TEST(Verify, FairnessGeometric) {
  const CliResult r = run("verify fairness --family gnp-dag --n 16 --p 0.2 --trials 500 --seed 4");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["scope"]["accepted"], 500);
  EXPECT_EQ(doc["scope"]["complete"], true);
  EXPECT_EQ(doc["violations"], 0);
}

TEST(Verify, FairnessWithoutMutationsIsInputError) {
  EXPECT_EQ(run("verify fairness --family upper-bound --k 4").exit_code, 2);
}

TEST(Verify, ObservationsAndRoot) {
  EXPECT_EQ(run("verify observations --family random-forest --n 20 --trials 50").exit_code, 0);
  EXPECT_EQ(run("verify root --family gnp-dag --n 10 --p 0.3 --trials 50").exit_code, 0);
  const std::string report = ::testing::TempDir() + "root_report.json";
  EXPECT_EQ(run("verify root --family witness --mechanism uniform -o " + report).exit_code, 1);
  EXPECT_EQ(run("verify --replay " + report).exit_code, 1);
  EXPECT_EQ(run("verify sideways --family witness").exit_code, 3);
  EXPECT_EQ(run("verify --family witness").exit_code, 3);
}

TEST(Eval, EnsembleAndCeiling) {
  const CliResult r = run("eval --family gnp-dag --n 20 --p 0.2 --trials 200 --min-ratio 1/2");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["below_threshold"], 0);
  EXPECT_EQ(run("eval --family tightness --k 3 --min-ratio 6/11").exit_code, 1);

  const CliResult ceiling = run("eval --ceiling --k 5");
  ASSERT_EQ(ceiling.exit_code, 0);
  const Json doc = Json::parse(ceiling.out);
  EXPECT_EQ(doc["min_ratio"], "1/2");
  EXPECT_EQ(doc["rows"][2]["ratio"], "39/56");
}

TEST(Bound, Table) {
  const CliResult r = run("bound --format csv --k 2,1000000");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("k,r_k,gap\n2,0.75,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nlimit,0.5906161"), std::string::npos) << r.out;
  const Json doc = Json::parse(run("bound --k 1000000").out);
  EXPECT_LE(doc["rows"][0]["gap"].get<double>(), 1e-6);
  EXPECT_EQ(run("bound --k 1").exit_code, 2);
}

TEST(Generate, DeterministicAndReadable) {
  const std::string args = "generate --family gnp-dag --n 25 --p 0.2 --seed 77";
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=77"), std::string::npos);
  EXPECT_NE(run(args + " --index 1").out, a.out);

  const std::string path = ::testing::TempDir() + "generated.txt";
  ASSERT_EQ(run(args + " -o " + path).exit_code, 0);
  EXPECT_EQ(slurp(path), a.out);
  // The written file feeds straight back into select.
  const CliResult s1 = run("select -i " + path);
  const CliResult s2 = run("select --family gnp-dag --n 25 --p 0.2 --seed 77");
  ASSERT_EQ(s1.exit_code, 0);
  EXPECT_EQ(Json::parse(s1.out)["ratio"], Json::parse(s2.out)["ratio"]);
}

TEST(Determinism, ByteIdenticalReports) {
  for (const char* args : {"verify fairness --family random-forest --n 15 --trials 100 --seed 9",
                           "eval --family gnp-dag --n 15 --p 0.3 --trials 50 --seed 9 --format csv",
                           "verify ic --family gnp-dag --n 10 --p 0.4 --trials 20 --subset-cap 4 --seed 9"}) {
    const CliResult a = run(args);
    const CliResult b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.exit_code, 0) << args << "\n" << a.out;
  }
}

}  // namespace
