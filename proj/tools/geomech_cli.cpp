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

// geomech command-line front end.
//
// Exit codes: 0 pass, 1 property violation (or a reproduced counterexample
// under --replay), 2 input error, 3 configuration error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomech/bounds.hpp"
#include "geomech/generators.hpp"
#include "geomech/json_io.hpp"
#include "geomech/verification.hpp"

namespace {

using geomech::Agent;
using geomech::Dag;
using geomech::Mechanism;
using geomech::Rational;
using geomech::json::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

constexpr const char* kVersion = "0.1.0";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv, kText };

struct RunConfig {
  std::string command;
  std::string input;
  std::string mechanism_name = "geometric";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  std::string format_name;  // empty: json, or an edge list for generate
  std::string output;
  std::optional<std::uint64_t> subset_cap;
  std::string replay;
  std::string family;
  std::size_t n = 12;
  double p = 0.25;
  std::vector<std::size_t> k;
  std::size_t j = 0;

  std::string mode;
  std::uint64_t index = 0;
  bool dot = false;
  bool ceiling = false;
  std::string min_ratio;

  Format format = Format::kJson;
};

std::string fmt_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dag read_graph(const std::string& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return geomech::json::parse_graph(Json::parse(text));
    } catch (const Json::parse_error& err) {
      throw InputError(path + ": " + err.what());
    }
  }
  return geomech::parse_edge_list(text);
}

Mechanism mechanism_named(const std::string& name) {
  auto mech = geomech::mechanism_by_name(name);
  if (!mech) {
    std::string known;
    for (auto m : geomech::mechanism_names()) known += (known.empty() ? "" : ", ") + std::string(m);
    throw ConfigError("unknown mechanism '" + name + "' (known: " + known + ")");
  }
  return *mech;
}

std::size_t k_value(const RunConfig& cfg, std::size_t fallback) {
  if (cfg.k.size() > 1) throw ConfigError("--k takes a single value here");
  return cfg.k.empty() ? fallback : cfg.k.front();
}

// Graphs under test: one input file, or an ensemble drawn from a family.
struct Source {
  std::function<Dag(std::uint64_t)> at;
  std::uint64_t count = 1;
  Json describe;
};

Source make_source(const RunConfig& cfg, std::uint64_t default_trials) {
  if (!cfg.input.empty() && !cfg.family.empty()) {
    throw ConfigError("use either --input or --family, not both");
  }
  if (!cfg.input.empty()) {
    auto dag = std::make_shared<Dag>(read_graph(cfg.input));
    return {[dag](std::uint64_t) { return *dag; }, 1, Json{{"input", cfg.input}}};
  }
  if (cfg.family.empty()) throw InputError("no graph given: pass --input or --family");
  const auto family = geomech::family_from_name(cfg.family);
  if (!family) throw ConfigError("unknown family '" + cfg.family + "'");
  const std::size_t k = k_value(cfg, 2);
  const geomech::EnsembleSpec spec{*family, cfg.n, cfg.p, k, cfg.j == 0 ? k : cfg.j, cfg.seed};
  const bool random =
      *family == geomech::Family::kGnpDag || *family == geomech::Family::kRandomForest;
  const std::uint64_t count = random ? cfg.trials.value_or(default_trials) : 1;
  Json describe{{"family", cfg.family}};
  switch (*family) {
    case geomech::Family::kGnpDag:
      describe["n"] = spec.n;
      describe["p"] = spec.p;
      break;
    case geomech::Family::kRandomForest:
    case geomech::Family::kChain:
      describe["n"] = spec.n;
      break;
    case geomech::Family::kUpperBound:
    case geomech::Family::kTightness:
      describe["k"] = spec.k;
      break;
    case geomech::Family::kWorstCase:
      describe["k"] = spec.k;
      describe["j"] = spec.j;
      break;
    default:
      break;
  }
  describe["graphs"] = count;
  // Fail on bad parameters before any work is done.
  (void)geomech::generate(spec, 0);
  return {[spec](std::uint64_t i) { return geomech::generate(spec, i); }, count, describe};
}

Json meta(const RunConfig& cfg, bool with_mechanism = true) {
  Json doc{{"tool", "geomech"}, {"version", kVersion}, {"command", cfg.command}};
  if (!cfg.mode.empty()) doc["mode"] = cfg.mode;
  if (with_mechanism) doc["mechanism"] = cfg.mechanism_name;
  doc["seed"] = cfg.seed;
  return doc;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + cfg.output + "'");
  out << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string csv_header_comment(const RunConfig& cfg) {
  std::string line = "# geomech " + cfg.command;
  if (!cfg.mode.empty()) line += " " + cfg.mode;
  return line + " seed=" + std::to_string(cfg.seed) + "\n";
}

// ---------------------------------------------------------------- select

int cmd_select(const RunConfig& cfg) {
  const Mechanism mech = mechanism_named(cfg.mechanism_name);
  const Source source = make_source(cfg, 1);
  const Dag dag = source.at(cfg.index);
  const auto set = geomech::influential_set(dag);
  const auto dist = mech(dag);
  const auto report = geomech::expected_ratio(dag, dist);

  switch (cfg.format) {
    case Format::kJson: {
      Json doc{{"meta", meta(cfg)}, {"source", source.describe}, {"n", dag.size()}};
      doc["influential"] = geomech::json::influential(set);
      const Json dist_doc = geomech::json::distribution(dist);
      const Json ratio_doc = geomech::json::ratio(report);
      for (const auto& [key, value] : dist_doc.items()) doc[key] = value;
      for (const auto& [key, value] : ratio_doc.items()) doc[key] = value;
      emit(cfg, dump(doc));
      break;
    }
    case Format::kCsv: {
      const auto table = geomech::progeny(dag);
      std::string out = csv_header_comment(cfg) + "agent,progeny,influential_rank,probability,probability_float\n";
      for (std::size_t i = 0; i < dag.size(); ++i) {
        const Agent a = Agent::from_index(i);
        const auto rank = set.rank(a);
        const Rational& x = dist.prob(a);
        out += std::to_string(a.id) + "," + std::to_string(table[a]) + "," +
               (rank ? std::to_string(*rank + 1) : "") + "," + geomech::to_string(x) + "," +
               fmt_double(geomech::to_double(x)) + "\n";
      }
      out += "abstain,,," + geomech::to_string(dist.abstain()) + "," +
             fmt_double(geomech::to_double(dist.abstain())) + "\n";
      emit(cfg, out);
      break;
    }
    case Format::kText: {
      std::ostringstream out;
      out << "mechanism " << cfg.mechanism_name << "  seed " << cfg.seed << "  n " << dag.size() << "\n";
      out << "influential:";
      for (const auto& m : set.members) out << " " << m.agent.id << "(p=" << m.progeny << ")";
      out << "\n";
      for (std::size_t i = 0; i < dag.size(); ++i) {
        const Rational& x = dist.prob(Agent::from_index(i));
        if (x != 0) out << "  x[" << i + 1 << "] = " << geomech::to_string(x) << "\n";
      }
      out << "  abstain = " << geomech::to_string(dist.abstain()) << "\n";
      out << "expected progeny " << geomech::to_string(report.expected_progeny) << " of "
          << report.max_progeny << ", ratio " << geomech::to_string(report.ratio) << " ("
          << fmt_double(geomech::to_double(report.ratio)) << ")\n";
      emit(cfg, out.str());
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyResult {
  Json scope;
  std::uint64_t violations = 0;
  Json counterexample;  // null when nothing was found
};

VerifyResult verify_ic(const RunConfig& cfg, const Mechanism& mech, const Source& source) {
  const std::uint64_t cap = cfg.subset_cap.value_or(geomech::kDefaultSubsetCap);
  VerifyResult result;
  std::uint64_t subsets = 0, sampled = 0;
  for (std::uint64_t t = 0; t < source.count; ++t) {
    const Dag dag = source.at(t);
    const auto report = geomech::check_ic_all(mech, dag, cap, geomech::split_seed(cfg.seed, t));
    subsets += report.subsets_checked;
    sampled += report.sampled_agents;
    result.violations += report.violations.size();
    if (!report.violations.empty() && result.counterexample.is_null()) {
      result.counterexample =
          geomech::json::ic_violation(cfg.mechanism_name, dag, report.violations.front());
      result.counterexample["graph_index"] = t;
    }
  }
  result.scope = {{"graphs", source.count},
                  {"subset_cap", cap},
                  {"exhaustive", sampled == 0},
                  {"sampled_agents", sampled},
                  {"misreports_checked", subsets}};
  return result;
}

VerifyResult verify_fairness(const RunConfig& cfg, const Mechanism& mech, const Source& source) {
  const std::uint64_t target = cfg.trials.value_or(500);
  const auto report = geomech::run_fairness(mech, source.at, target, 50 * target + 100, cfg.seed);
  if (report.accepted == 0 && report.failures.empty()) {
    throw InputError("no valid mutation outside the top agent's progeny; nothing to check");
  }
  VerifyResult result;
  result.violations = report.failures.size();
  if (!report.failures.empty()) {
    result.counterexample =
        geomech::json::fairness_violation(cfg.mechanism_name, report.failures.front());
  }
  result.scope = {{"target_samples", target},
                  {"attempts", report.attempts},
                  {"accepted", report.accepted},
                  {"discarded", report.discarded},
                  {"complete", report.accepted >= target}};
  return result;
}

Json observation_doc(const Dag& dag, const geomech::ObservationReport& r, std::uint64_t cap,
                     std::uint64_t seed) {
  return {{"kind", "observation-violation"},
          {"graph", geomech::json::graph(dag)},
          {"path_nesting", r.path_nesting},
          {"sink_maximum", r.sink_maximum},
          {"non_influential_closed", r.non_influential_closed},
          {"subset_cap", cap},
          {"seed", seed}};
}

VerifyResult verify_observations(const RunConfig& cfg, const Source& source) {
  const std::uint64_t cap = cfg.subset_cap.value_or(256);
  VerifyResult result;
  std::uint64_t checked = 0;
  bool exhaustive = true;
  for (std::uint64_t t = 0; t < source.count; ++t) {
    const Dag dag = source.at(t);
    const std::uint64_t seed = geomech::split_seed(cfg.seed, t);
    const auto report = geomech::check_observations(dag, cap, seed);
    checked += report.misreports_checked;
    exhaustive = exhaustive && report.exhaustive;
    if (!report.all()) {
      ++result.violations;
      if (result.counterexample.is_null()) result.counterexample = observation_doc(dag, report, cap, seed);
    }
  }
  result.scope = {{"graphs", source.count},
                  {"subset_cap", cap},
                  {"exhaustive", exhaustive},
                  {"misreports_checked", checked}};
  return result;
}

VerifyResult verify_root(const RunConfig& cfg, const Mechanism& mech, const Source& source) {
  VerifyResult result;
  for (std::uint64_t t = 0; t < source.count; ++t) {
    const Dag dag = source.at(t);
    if (geomech::check_root_property(mech, dag)) continue;
    ++result.violations;
    if (result.counterexample.is_null()) {
      result.counterexample = {{"kind", "root-violation"},
                               {"mechanism", cfg.mechanism_name},
                               {"graph", geomech::json::graph(dag)}};
    }
  }
  result.scope = {{"graphs", source.count}};
  return result;
}

int report_verify(const RunConfig& cfg, const Json& source_desc, const VerifyResult& result) {
  switch (cfg.format) {
    case Format::kJson: {
      Json doc{{"meta", meta(cfg, cfg.mode != "observations")},
               {"source", source_desc},
               {"scope", result.scope},
               {"violations", result.violations},
               {"counterexample", result.counterexample}};
      emit(cfg, dump(doc));
      break;
    }
    case Format::kCsv: {
      std::string header, row;
      for (const auto& [key, value] : result.scope.items()) {
        header += key + ",";
        row += value.dump() + ",";
      }
      emit(cfg, csv_header_comment(cfg) + header + "violations\n" + row +
                    std::to_string(result.violations) + "\n");
      break;
    }
    case Format::kText: {
      std::ostringstream out;
      out << "verify " << cfg.mode << "  mechanism " << cfg.mechanism_name << "  seed " << cfg.seed
          << "\nscope " << result.scope.dump() << "\n";
      out << (result.violations == 0 ? "no violations" : std::to_string(result.violations) + " violation(s)")
          << "\n";
      if (!result.counterexample.is_null()) out << "counterexample " << result.counterexample.dump() << "\n";
      emit(cfg, out.str());
      break;
    }
  }
  return result.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_replay(RunConfig cfg) {
  Json doc;
  try {
    doc = Json::parse(read_text(cfg.replay));
  } catch (const Json::parse_error& err) {
    throw InputError(cfg.replay + ": " + err.what());
  }
  // A full verify report is accepted as well as a bare counterexample.
  if (doc.is_object() && doc.contains("counterexample")) doc = doc["counterexample"];
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InputError(cfg.replay + ": no counterexample to replay");
  }
  const std::string kind = doc["kind"];
  bool reproduced = false;
  if (kind == "ic-violation") {
    const auto rec = geomech::json::parse_ic_violation(doc);
    cfg.mechanism_name = rec.mechanism;
    reproduced = geomech::replays(mechanism_named(rec.mechanism), rec.graph, rec.violation);
  } else if (kind == "fairness-violation") {
    const auto rec = geomech::json::parse_fairness_violation(doc);
    cfg.mechanism_name = rec.mechanism;
    const auto now = geomech::evaluate_fairness(mechanism_named(rec.mechanism), rec.sample);
    reproduced = !now.fair() && now.base_prob == rec.recorded.base_prob &&
                 now.mutated_prob == rec.recorded.mutated_prob;
  } else if (kind == "observation-violation") {
    const Dag dag = geomech::json::parse_graph(doc.at("graph"));
    const auto report = geomech::check_observations(dag, doc.value("subset_cap", std::uint64_t{256}),
                                                    doc.value("seed", std::uint64_t{0}));
    reproduced = !report.all();
  } else if (kind == "root-violation") {
    cfg.mechanism_name = doc.value("mechanism", "");
    const Dag dag = geomech::json::parse_graph(doc.at("graph"));
    reproduced = !geomech::check_root_property(mechanism_named(cfg.mechanism_name), dag);
  } else {
    throw InputError(cfg.replay + ": unknown counterexample kind '" + kind + "'");
  }
  cfg.mode = "replay";
  switch (cfg.format) {
    case Format::kJson:
      emit(cfg, dump(Json{{"meta", meta(cfg)},
                          {"replay", {{"file", cfg.replay}, {"kind", kind}, {"reproduced", reproduced}}}}));
      break;
    case Format::kCsv:
      emit(cfg, csv_header_comment(cfg) + "kind,reproduced\n" + kind + "," +
                    (reproduced ? "true" : "false") + "\n");
      break;
    case Format::kText:
      emit(cfg, "replay " + kind + ": " + (reproduced ? "reproduced" : "not reproduced") + "\n");
      break;
  }
  return reproduced ? kExitViolation : kExitOk;
}

int cmd_verify(RunConfig cfg) {
  if (!cfg.replay.empty()) return cmd_replay(cfg);
  if (cfg.mode.empty()) throw ConfigError("verify needs a mode: ic, fairness, observations or root");
  if (cfg.mode != "ic" && cfg.mode != "fairness" && cfg.mode != "observations" && cfg.mode != "root") {
    throw ConfigError("unknown verify mode '" + cfg.mode + "'");
  }
  const Mechanism mech = mechanism_named(cfg.mechanism_name);
  const Source source = make_source(cfg, 100);
  VerifyResult result;
  if (cfg.mode == "ic") result = verify_ic(cfg, mech, source);
  if (cfg.mode == "fairness") result = verify_fairness(cfg, mech, source);
  if (cfg.mode == "observations") result = verify_observations(cfg, source);
  if (cfg.mode == "root") result = verify_root(cfg, mech, source);
  return report_verify(cfg, source.describe, result);
}

// ---------------------------------------------------------------- eval

std::optional<Rational> parse_threshold(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return geomech::parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError("--min-ratio expects a rational such as 1/2");
  }
}

int cmd_ceiling(const RunConfig& cfg, const Mechanism& mech) {
  const std::size_t k = k_value(cfg, 10);
  const auto report = geomech::empirical_ceiling_check(mech, k);
  switch (cfg.format) {
    case Format::kJson: {
      Json rows = Json::array();
      for (std::size_t t = 0; t < report.ratios.size(); ++t) {
        rows.push_back({{"j", k + t},
                        {"ratio", geomech::to_string(report.ratios[t])},
                        {"ratio_float", geomech::to_double(report.ratios[t])}});
      }
      Json doc{{"meta", meta(cfg)}, {"k", k}, {"rows", std::move(rows)}};
      doc["min_ratio"] = geomech::to_string(report.min_ratio);
      doc["min_ratio_float"] = geomech::to_double(report.min_ratio);
      doc["argmin_j"] = report.argmin_j;
      doc["equalized_ratio"] = report.equalized_ratio;
      doc["monotone"] = report.monotone;
      emit(cfg, dump(doc));
      break;
    }
    case Format::kCsv: {
      std::string out = csv_header_comment(cfg) + "j,ratio,ratio_float\n";
      for (std::size_t t = 0; t < report.ratios.size(); ++t) {
        out += std::to_string(k + t) + "," + geomech::to_string(report.ratios[t]) + "," +
               fmt_double(geomech::to_double(report.ratios[t])) + "\n";
      }
      emit(cfg, out);
      break;
    }
    case Format::kText: {
      std::ostringstream out;
      out << "ceiling k=" << k << "  mechanism " << cfg.mechanism_name << "\n";
      for (std::size_t t = 0; t < report.ratios.size(); ++t) {
        out << "  j=" << k + t << "  " << geomech::to_string(report.ratios[t]) << "\n";
      }
      out << "min " << geomech::to_string(report.min_ratio) << " at j=" << report.argmin_j
          << ", r_k " << fmt_double(report.equalized_ratio) << ", monotone "
          << (report.monotone ? "yes" : "no") << "\n";
      emit(cfg, out.str());
      break;
    }
  }
  const auto threshold = parse_threshold(cfg.min_ratio);
  return threshold && report.min_ratio < *threshold ? kExitViolation : kExitOk;
}

int cmd_eval(const RunConfig& cfg) {
  const Mechanism mech = mechanism_named(cfg.mechanism_name);
  if (cfg.ceiling) return cmd_ceiling(cfg, mech);
  const auto threshold = parse_threshold(cfg.min_ratio);
  const Source source = make_source(cfg, 100);

  std::optional<Rational> min_ratio;
  std::uint64_t argmin = 0, below = 0;
  double sum = 0;
  std::string csv = csv_header_comment(cfg) + "trial,n,edges,expected_progeny,max_progeny,ratio,ratio_float\n";
  for (std::uint64_t t = 0; t < source.count; ++t) {
    const Dag dag = source.at(t);
    const auto r = geomech::expected_ratio(dag, mech(dag));
    if (!min_ratio || r.ratio < *min_ratio) {
      min_ratio = r.ratio;
      argmin = t;
    }
    if (threshold && r.ratio < *threshold) ++below;
    sum += geomech::to_double(r.ratio);
    if (cfg.format == Format::kCsv) {
      csv += std::to_string(t) + "," + std::to_string(dag.size()) + "," + std::to_string(dag.edge_count()) +
             "," + geomech::to_string(r.expected_progeny) + "," + std::to_string(r.max_progeny) + "," +
             geomech::to_string(r.ratio) + "," + fmt_double(geomech::to_double(r.ratio)) + "\n";
    }
  }
  const double mean = sum / static_cast<double>(source.count);
  switch (cfg.format) {
    case Format::kJson: {
      Json doc{{"meta", meta(cfg)}, {"source", source.describe}, {"graphs", source.count}};
      doc["min_ratio"] = geomech::to_string(*min_ratio);
      doc["min_ratio_float"] = geomech::to_double(*min_ratio);
      doc["argmin_trial"] = argmin;
      doc["mean_ratio_float"] = mean;
      if (threshold) {
        doc["threshold"] = geomech::to_string(*threshold);
        doc["below_threshold"] = below;
      }
      emit(cfg, dump(doc));
      break;
    }
    case Format::kCsv:
      emit(cfg, csv);
      break;
    case Format::kText: {
      std::ostringstream out;
      out << "eval  mechanism " << cfg.mechanism_name << "  seed " << cfg.seed << "  graphs "
          << source.count << "\nmin ratio " << geomech::to_string(*min_ratio) << " (trial " << argmin
          << "), mean " << fmt_double(mean) << "\n";
      if (threshold) out << below << " graph(s) below " << geomech::to_string(*threshold) << "\n";
      emit(cfg, out.str());
      break;
    }
  }
  return below == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const RunConfig& cfg) {
  std::vector<std::size_t> ks = cfg.k;
  if (ks.empty()) ks = {2, 3, 5, 10, 100, 1000, 10'000, 100'000, 1'000'000};
  for (std::size_t k : ks) {
    if (k < 2) throw InputError("bound needs k >= 2, got " + std::to_string(k));
  }
  const auto rows = geomech::convergence_table(ks);
  const double limit = static_cast<double>(geomech::limit_constant());
  switch (cfg.format) {
    case Format::kJson: {
      Json table = Json::array();
      for (const auto& row : rows) {
        table.push_back({{"k", row.k},
                         {"r_k", static_cast<double>(row.ratio)},
                         {"gap", static_cast<double>(row.gap)}});
      }
      emit(cfg, dump(Json{{"meta", meta(cfg, false)}, {"rows", std::move(table)}, {"limit", limit}}));
      break;
    }
    case Format::kCsv: {
      std::string out = csv_header_comment(cfg) + "k,r_k,gap\n";
      for (const auto& row : rows) {
        out += std::to_string(row.k) + "," + fmt_double(static_cast<double>(row.ratio)) + "," +
               fmt_double(static_cast<double>(row.gap)) + "\n";
      }
      out += "limit," + fmt_double(limit) + ",0\n";
      emit(cfg, out);
      break;
    }
    case Format::kText: {
      std::ostringstream out;
      for (const auto& row : rows) {
        out << "k=" << row.k << "  r_k=" << fmt_double(static_cast<double>(row.ratio))
            << "  gap=" << fmt_double(static_cast<double>(row.gap)) << "\n";
      }
      out << "limit 1/(1+ln 2) = " << fmt_double(limit) << "\n";
      emit(cfg, out.str());
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const RunConfig& cfg) {
  if (cfg.family.empty()) throw ConfigError("generate needs --family");
  const Source source = make_source(cfg, 1);
  const Dag dag = source.at(cfg.index);
  std::string header = "geomech generate";
  for (const auto& [key, value] : source.describe.items()) {
    if (key != "graphs") header += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  header += " index=" + std::to_string(cfg.index) + " seed=" + std::to_string(cfg.seed);
  if (cfg.dot) {
    emit(cfg, "// " + header + "\n" + geomech::serialize(dag, geomech::GraphFormat::kDot));
  } else if (cfg.format_name == "json") {
    emit(cfg, dump(Json{{"meta", meta(cfg, false)}, {"graph", geomech::json::graph(dag)}}));
  } else {
    emit(cfg, "# " + header + "\n" + geomech::serialize(dag));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- main

void add_shared(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-i,--input", cfg.input, "Graph file (edge list or JSON); '-' for stdin");
  sub->add_option("--mechanism", cfg.mechanism_name, "geometric, uniform or optimal-non-ic");
  sub->add_option("--seed", cfg.seed, "Base seed");
  sub->add_option("--trials", cfg.trials, "Ensemble size or sample target");
  sub->add_option("--format", cfg.format_name, "json, csv or text");
  sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  sub->add_option("--subset-cap", cfg.subset_cap, "Misreport subsets per agent before sampling");
  sub->add_option("--replay", cfg.replay, "Re-run a recorded counterexample");
  sub->add_option("--family", cfg.family,
                  "gnp-dag, random-forest, chain, upper-bound, worst-case, tightness, witness, two-leader");
  sub->add_option("--n", cfg.n, "Agents");
  sub->add_option("--p", cfg.p, "Edge probability (gnp-dag)");
  sub->add_option("--k", cfg.k, "Family parameter; a list for bound")->delimiter(',');
  sub->add_option("--j", cfg.j, "Worst-case graph index, k <= j <= 2k-1");
}

int run(int argc, char** argv) {
  CLI::App app{"Geometric Mechanism for influential agent selection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  RunConfig cfg;

  auto* select = app.add_subcommand("select", "Selection distribution for one graph");
  auto* verify = app.add_subcommand("verify", "Check ic, fairness, observations or root property");
  auto* eval = app.add_subcommand("eval", "Expected progeny ratio over an ensemble");
  auto* bound = app.add_subcommand("bound", "Upper-bound convergence table");
  auto* generate = app.add_subcommand("generate", "Write a generated graph");
  for (auto* sub : {select, verify, eval, bound, generate}) add_shared(sub, cfg);
  for (auto* sub : {select, generate}) sub->add_option("--index", cfg.index, "Ensemble item");
  verify->add_option("mode,--mode", cfg.mode, "ic, fairness, observations or root");
  eval->add_flag("--ceiling", cfg.ceiling, "Evaluate the worst-case family for --k");
  eval->add_option("--min-ratio", cfg.min_ratio, "Exit 1 if any ratio falls below this rational");
  generate->add_flag("--dot", cfg.dot, "Emit Graphviz DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cfg.format_name.empty() || cfg.format_name == "json") cfg.format = Format::kJson;
    else if (cfg.format_name == "csv") cfg.format = Format::kCsv;
    else if (cfg.format_name == "text") cfg.format = Format::kText;
    else throw ConfigError("unknown format '" + cfg.format_name + "'");

    if (select->parsed()) return cfg.command = "select", cmd_select(cfg);
    if (verify->parsed()) return cfg.command = "verify", cmd_verify(cfg);
    if (eval->parsed()) return cfg.command = "eval", cmd_eval(cfg);
    if (bound->parsed()) return cfg.command = "bound", cmd_bound(cfg);
    if (generate->parsed()) return cfg.command = "generate", cmd_generate(cfg);
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const geomech::GraphError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    // Schema, generator parameter and replay precondition errors.
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
