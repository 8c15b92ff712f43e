// Copyright 2026 The selbn Authors
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

#include "selbn/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "selbn/error.hpp"

namespace selbn {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "observed") return Role::kObserved;
  if (s == "selection") return Role::kSelection;
  if (s == "conditioning") return Role::kConditioning;
  if (s == "fixed") return Role::kFixed;
  return std::nullopt;
}

NodeDecl parse_node(const std::vector<std::string_view>& tokens, int line) {
  if (tokens.size() < 2) throw ParseError(line, "node declaration needs a name");
  NodeDecl d;
  d.name = std::string(tokens[1]);
  if (!is_valid_node_name(d.name)) throw ParseError(line, "invalid node name '" + d.name + "'");
  std::map<std::string_view, std::string_view> kv;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == tokens[i].size())
      throw ParseError(line, "expected key=value, got '" + std::string(tokens[i]) + "'");
    const auto key = tokens[i].substr(0, eq);
    if (key != "states" && key != "role" && key != "value")
      throw ParseError(line, "unknown attribute '" + std::string(key) + "'");
    if (!kv.emplace(key, tokens[i].substr(eq + 1)).second)
      throw ParseError(line, "attribute '" + std::string(key) + "' given twice");
  }
  auto states = kv.find("states");
  if (states == kv.end()) throw ParseError(line, "node '" + d.name + "' needs states=<k>");
  const auto k = parse_int(states->second);
  if (!k || *k < 2) throw ParseError(line, "states must be an integer >= 2");
  d.states = *k;
  if (auto r = kv.find("role"); r != kv.end()) {
    const auto role = parse_role(r->second);
    if (!role) throw ParseError(line, "unknown role '" + std::string(r->second) + "'");
    d.role = *role;
  }
  if (auto v = kv.find("value"); v != kv.end()) {
    if (d.role != Role::kSelection) throw ParseError(line, "value= is only allowed with role=selection");
    const auto value = parse_int(v->second);
    if (!value || *value < 0 || *value >= d.states) throw ParseError(line, "selected value out of range");
    d.value = *value;
  } else if (d.role == Role::kSelection) {
    throw ParseError(line, "selection node '" + d.name + "' needs value=<v>");
  }
  return d;
}

const char* role_shape(Role role) {
  switch (role) {
    case Role::kSelection:
      return " [shape=box]";
    case Role::kConditioning:
      return " [shape=box, style=dashed]";
    case Role::kFixed:
      return " [shape=plaintext]";
    case Role::kObserved:
      break;
  }
  return "";
}

template <typename T>
T json_get(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::kParse, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("bad value for '") + key + "': " + e.what());
  }
}

std::vector<double> flatten_rows(const nlohmann::json& rows, std::size_t n_rows, std::size_t width,
                                 const std::string& what) {
  if (!rows.is_array() || rows.size() != n_rows)
    fail(ErrorCode::kParse, what + ": expected " + std::to_string(n_rows) + " rows");
  std::vector<double> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width)
      fail(ErrorCode::kParse, what + ": every row needs " + std::to_string(width) + " entries");
    for (const auto& x : row) {
      if (!x.is_number()) fail(ErrorCode::kParse, what + ": entries must be numbers");
      out.push_back(x.get<double>());
    }
  }
  return out;
}

nlohmann::json rows_json(const std::vector<double>& values, std::size_t width) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < values.size(); i += width)
    rows.push_back(std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(i),
                                       values.begin() + static_cast<std::ptrdiff_t>(i + width)));
  return rows;
}

}  // namespace

const char* to_string(Role role) noexcept {
  switch (role) {
    case Role::kObserved:
      return "observed";
    case Role::kSelection:
      return "selection";
    case Role::kConditioning:
      return "conditioning";
    case Role::kFixed:
      return "fixed";
  }
  return "observed";
}

std::vector<std::string> GraphFile::names() const {
  std::vector<std::string> out;
  for (const auto& d : nodes) out.push_back(d.name);
  return out;
}

const NodeDecl& GraphFile::decl(std::string_view name) const {
  for (const auto& d : nodes)
    if (d.name == name) return d;
  fail(ErrorCode::kUnknownNode, "unknown node '" + std::string(name) + "'");
}

NodeSet GraphFile::with_role(Role role) const {
  NodeSet out;
  for (const auto& d : nodes)
    if (d.role == role) out.insert(d.name);
  return out;
}

Cardinalities GraphFile::cards() const {
  Cardinalities out;
  for (const auto& d : nodes) out[d.name] = d.states;
  return out;
}

Pdag GraphFile::pdag() const { return Pdag(names(), directed, undirected); }

Dag GraphFile::dag() const {
  if (!undirected.empty()) fail(ErrorCode::kInvalidGraph, "graph has undirected edges; a DAG is required");
  return Dag(names(), directed);
}

ConditionalDag GraphFile::conditional_dag() const { return ConditionalDag(dag(), with_role(Role::kFixed)); }

SelectionProblem GraphFile::selection_problem() const {
  if (!with_role(Role::kFixed).empty()) fail(ErrorCode::kInvalidArgument, "fixed nodes are not allowed here");
  SelectionProblem sp;
  sp.graph = dag();
  sp.observed = with_role(Role::kObserved);
  sp.conditioning = with_role(Role::kConditioning);
  sp.selection = with_role(Role::kSelection);
  for (const auto& d : nodes)
    if (d.role == Role::kSelection) sp.values[d.name] = *d.value;
  sp.cards = cards();
  sp.validate();
  return sp;
}

GraphFile GraphFile::with_graph(const Pdag& g) const {
  GraphFile out;
  for (const auto& n : g.nodes()) decl(n);
  for (const auto& d : nodes)
    if (g.contains(d.name)) out.nodes.push_back(d);
  out.directed = g.directed_edges();
  out.undirected = g.undirected_edges();
  return out;
}

GraphFile GraphFile::with_graph(const ConditionalDag& g) const {
  GraphFile out = with_graph(g.graph());
  for (auto& d : out.nodes)
    if (g.is_fixed(d.name)) {
      d.role = Role::kFixed;
      d.value.reset();
    } else if (d.role == Role::kFixed) {
      d.role = Role::kObserved;
    }
  return out;
}

GraphFile parse_graph(std::string_view text) {
  GraphFile out;
  std::map<std::string, int, std::less<>> declared;
  std::map<std::string, std::vector<std::string>> children;
  std::set<std::pair<std::string, std::string>> pairs;

  auto reaches = [&](const std::string& from, const std::string& to) {
    std::vector<std::string> stack = {from};
    NodeSet seen = {from};
    while (!stack.empty()) {
      const std::string n = stack.back();
      stack.pop_back();
      if (n == to) return true;
      for (const auto& c : children[n])
        if (seen.insert(c).second) stack.push_back(c);
    }
    return false;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (tokens[0] == "node") {
      NodeDecl d = parse_node(tokens, line_no);
      if (!declared.emplace(d.name, line_no).second)
        throw ParseError(line_no, "node '" + d.name + "' declared twice");
      out.nodes.push_back(std::move(d));
      continue;
    }

    const auto arrow = line.find("->");
    const auto dash = line.find("--");
    if (arrow == std::string_view::npos && dash == std::string_view::npos)
      throw ParseError(line_no, "expected a node declaration or an edge");
    const bool is_directed = arrow != std::string_view::npos;
    const auto at = is_directed ? arrow : dash;
    const std::string a(trim(line.substr(0, at)));
    const std::string b(trim(line.substr(at + 2)));
    for (const auto& n : {a, b}) {
      if (!is_valid_node_name(n)) throw ParseError(line_no, "invalid node name '" + n + "'");
      if (!declared.count(n)) throw ParseError(line_no, "edge names undeclared node '" + n + "'");
    }
    if (a == b) throw ParseError(line_no, "self-edge on '" + a + "'");
    if (!pairs.insert(std::minmax(a, b)).second)
      throw ParseError(line_no, "second edge between '" + a + "' and '" + b + "'");
    if (is_directed) {
      if (reaches(b, a)) throw ParseError(line_no, "edge " + a + " -> " + b + " creates a directed cycle");
      children[a].push_back(b);
      out.directed.push_back({a, b});
    } else {
      out.undirected.push_back({a, b});
    }
  }

  for (const auto& d : out.nodes)
    if (d.role == Role::kFixed)
      for (const auto& [a, b] : out.directed)
        if (b == d.name) throw ParseError(declared.at(d.name), "fixed node '" + d.name + "' has a parent");
  try {
    out.pdag();
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFile load_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string to_text(const GraphFile& g) {
  std::ostringstream out;
  for (const auto& d : g.nodes) {
    out << "node " << d.name << " states=" << d.states;
    if (d.role != Role::kObserved) out << " role=" << to_string(d.role);
    if (d.value) out << " value=" << *d.value;
    out << '\n';
  }
  for (const auto& [a, b] : g.directed) out << a << " -> " << b << '\n';
  for (const auto& [a, b] : g.undirected) out << a << " -- " << b << '\n';
  return out.str();
}

nlohmann::json to_json(const GraphFile& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& d : g.nodes) {
    nlohmann::json n = {{"name", d.name}, {"states", d.states}, {"role", to_string(d.role)}};
    n["value"] = d.value ? nlohmann::json(*d.value) : nlohmann::json(nullptr);
    nodes.push_back(std::move(n));
  }
  auto edges = [](const EdgeList& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b] : list) arr.push_back({a, b});
    return arr;
  };
  return {{"nodes", std::move(nodes)}, {"directed", edges(g.directed)}, {"undirected", edges(g.undirected)}};
}

std::string to_dot(const GraphFile& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const auto& d : g.nodes) out << "  " << d.name << role_shape(d.role) << ";\n";
  for (const auto& [a, b] : g.directed) out << "  " << a << " -> " << b << ";\n";
  for (const auto& [a, b] : g.undirected) out << "  " << a << " -> " << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

CategoricalBn parse_cpts(const nlohmann::json& doc, const ConditionalDag& g, const Cardinalities& cards) {
  if (!doc.is_object()) fail(ErrorCode::kParse, "CPT document must be an object");
  for (const auto& [key, value] : doc.items())
    if (!g.graph().contains(key) || g.is_fixed(key))
      fail(ErrorCode::kParse, "CPT given for unknown or fixed node '" + key + "'");
  std::map<std::string, CondTable> cpts;
  for (const auto& node : g.random_in_order()) {
    if (!doc.contains(node)) fail(ErrorCode::kParse, "missing CPT for '" + node + "'");
    const auto& entry = doc.at(node);
    const auto given_names = json_get<std::vector<std::string>>(entry, "given");
    std::vector<Variable> given;
    for (const auto& n : given_names) {
      if (!cards.count(n)) fail(ErrorCode::kParse, "CPT for '" + node + "' names unknown parent '" + n + "'");
      given.push_back({n, cards.at(n)});
    }
    if (!entry.contains("rows")) fail(ErrorCode::kParse, "CPT for '" + node + "' needs rows");
    auto values = flatten_rows(entry.at("rows"), table_size(given), static_cast<std::size_t>(cards.at(node)),
                               "CPT for '" + node + "'");
    cpts.emplace(node, CondTable(std::move(given), {{node, cards.at(node)}}, std::move(values)));
  }
  return CategoricalBn(g, cards, std::move(cpts));
}

nlohmann::json cpts_to_json(const CategoricalBn& bn) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [node, cpt] : bn.cpts()) {
    std::vector<std::string> given;
    for (const auto& v : cpt.given()) given.push_back(v.name);
    doc[node] = {{"given", given}, {"rows", rows_json(cpt.factor().values(), table_size(cpt.over()))}};
  }
  return doc;
}

CondTable parse_cond_table(const nlohmann::json& doc, const Cardinalities& cards) {
  const auto over_names = json_get<std::vector<std::string>>(doc, "over");
  const auto given_names =
      doc.contains("given") ? json_get<std::vector<std::string>>(doc, "given") : std::vector<std::string>{};
  Cardinalities states = cards;
  if (doc.contains("states"))
    for (const auto& [n, k] : json_get<std::map<std::string, int>>(doc, "states")) states.emplace(n, k);
  auto vars = [&](const std::vector<std::string>& names) {
    std::vector<Variable> out;
    for (const auto& n : names) {
      if (!is_valid_node_name(n)) fail(ErrorCode::kParse, "invalid variable name '" + n + "'");
      auto it = states.find(n);
      out.push_back({n, it == states.end() ? 2 : it->second});
    }
    return out;
  };
  auto given = vars(given_names);
  auto over = vars(over_names);
  if (!doc.contains("rows")) fail(ErrorCode::kParse, "table needs rows");
  auto values = flatten_rows(doc.at("rows"), table_size(given), table_size(over), "table");
  return CondTable(std::move(given), std::move(over), std::move(values));
}

nlohmann::json cond_table_to_json(const CondTable& t) {
  std::vector<std::string> over, given;
  nlohmann::json states = nlohmann::json::object();
  for (const auto& v : t.given()) {
    given.push_back(v.name);
    states[v.name] = v.card;
  }
  for (const auto& v : t.over()) {
    over.push_back(v.name);
    states[v.name] = v.card;
  }
  return {{"over", over}, {"given", given}, {"states", states}, {"rows", rows_json(t.factor().values(), table_size(t.over()))}};
}

}  // namespace selbn
