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

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "geomech/dag.hpp"
#include "geomech/rational.hpp"

namespace geomech {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) parts.push_back(s.substr(i, j - i));
    i = j;
  }
  return parts;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void malformed(std::size_t line, std::string_view content,
                            std::string_view why) {
  throw GraphError(GraphErrc::kMalformedLine,
                   "line " + std::to_string(line) + ": " + std::string(why) +
                       ": '" + std::string(content) + "'",
                   line);
}

}  // namespace

Dag parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto fields = split_ws(line);
    if (!n) {
      if (fields.size() != 1) malformed(line_no, line, "expected agent count");
      const auto value = parse_uint(fields[0]);
      if (!value) malformed(line_no, line, "agent count is not an integer");
      if (*value == 0) {
        throw GraphError(GraphErrc::kEmptyGraph,
                         "line " + std::to_string(line_no) +
                             ": graph must have at least one agent",
                         line_no);
      }
      if (*value > UINT32_MAX - 1) {
        throw GraphError(GraphErrc::kAgentOutOfRange,
                         "line " + std::to_string(line_no) + ": agent count too large",
                         line_no);
      }
      n = static_cast<std::size_t>(*value);
    } else {
      if (fields.size() != 2) malformed(line_no, line, "expected 'u v'");
      const auto u = parse_uint(fields[0]);
      const auto v = parse_uint(fields[1]);
      if (!u || !v) malformed(line_no, line, "agent ids must be integers");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) {
        throw GraphError(GraphErrc::kAgentOutOfRange,
                         "line " + std::to_string(line_no) + ": edge '" +
                             std::string(line) + "' references an agent outside 1.." +
                             std::to_string(*n),
                         line_no);
      }
      const Edge e{Agent{static_cast<std::uint32_t>(*u)},
                   Agent{static_cast<std::uint32_t>(*v)}};
      if (e.follower == e.followee) {
        throw GraphError(GraphErrc::kSelfLoop,
                         "line " + std::to_string(line_no) + ": self-loop on agent " +
                             std::to_string(e.follower.id),
                         line_no, e);
      }
      if (!seen.insert(e).second) {
        throw GraphError(GraphErrc::kDuplicateEdge,
                         "line " + std::to_string(line_no) + ": duplicate edge '" +
                             std::string(line) + "'",
                         line_no, e);
      }
      edges.push_back(e);
      lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!n) {
    throw GraphError(GraphErrc::kEmptyGraph, "missing agent count line");
  }
  const std::vector<Edge> original = edges;
  try {
    return Dag::from_edges(*n, std::move(edges));
  } catch (const GraphError& err) {
    if (err.code() != GraphErrc::kCycle) throw;
  }
  // Report the first edge, in input order, that closes a cycle: the shortest
  // cyclic prefix ends with it.
  auto cyclic = [&](std::size_t len) -> std::optional<GraphError> {
    try {
      Dag::from_edges(*n, {original.begin(), original.begin() + static_cast<std::ptrdiff_t>(len)});
      return std::nullopt;
    } catch (const GraphError& err) {
      return err;
    }
  };
  std::size_t lo = 1, hi = original.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (cyclic(mid)) hi = mid; else lo = mid + 1;
  }
  const GraphError err = *cyclic(hi);
  const std::string what = err.what();
  const Edge closing = original[hi - 1];
  const std::size_t line = lines[hi - 1];
  throw GraphError(GraphErrc::kCycle,
                   "line " + std::to_string(line) + ": cycle detected at edge " +
                       std::to_string(closing.follower.id) + " " +
                       std::to_string(closing.followee.id) + what.substr(what.find(" (")),
                   line, closing);
}

std::string serialize(const Dag& dag, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::kEdgeList) {
    out << dag.size() << '\n';
    for (const Edge& e : dag.edges()) {
      out << e.follower.id << ' ' << e.followee.id << '\n';
    }
  } else {
    out << "digraph G {\n";
    for (std::size_t i = 1; i <= dag.size(); ++i) {
      out << "  " << i << " [label=\"" << i << "\"];\n";
    }
    for (const Edge& e : dag.edges()) {
      out << "  " << e.follower.id << " -> " << e.followee.id << ";\n";
    }
    out << "}\n";
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("-0123456789") != std::string::npos) {
      throw std::runtime_error("malformed rational '" + text + "'");
    }
    return BigInt(part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::runtime_error("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace geomech
