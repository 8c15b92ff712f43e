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

// The line-oriented graph format, its JSON and DOT renderings, and the CPT
// JSON sidecar.
//
//   node <name> states=<k> [role=selection value=<v>] [role=conditioning]
//   node <name> states=<k> role=fixed
//   a -> b
//   a -- b
//
// '#' starts a comment. Errors carry the offending line number.

#ifndef SELBN_GRAPH_IO_HPP_
#define SELBN_GRAPH_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "selbn/graph.hpp"
#include "selbn/prob.hpp"
#include "selbn/selection.hpp"

namespace selbn {

enum class Role { kObserved, kSelection, kConditioning, kFixed };

const char* to_string(Role role) noexcept;

struct NodeDecl {
  std::string name;
  int states = 2;
  Role role = Role::kObserved;
  std::optional<int> value;  // selection nodes only

  friend bool operator==(const NodeDecl&, const NodeDecl&) = default;
};

struct GraphFile {
  std::vector<NodeDecl> nodes;
  EdgeList directed;
  EdgeList undirected;

  std::vector<std::string> names() const;
  const NodeDecl& decl(std::string_view name) const;
  NodeSet with_role(Role role) const;
  Cardinalities cards() const;

  Pdag pdag() const;
  // Throws kInvalidGraph if there are undirected edges.
  Dag dag() const;
  ConditionalDag conditional_dag() const;
  // Observed, conditioning and selection roles; throws kInvalidArgument on
  // fixed nodes.
  SelectionProblem selection_problem() const;

  // Declarations of g's nodes (in this file's order) with g's edges.
  GraphFile with_graph(const Pdag& g) const;
  GraphFile with_graph(const ConditionalDag& g) const;
};

// Throws ParseError.
GraphFile parse_graph(std::string_view text);
// Throws ParseError, or kInvalidArgument if the file cannot be read.
GraphFile load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

std::string to_text(const GraphFile& g);
nlohmann::json to_json(const GraphFile& g);
std::string to_dot(const GraphFile& g, std::string_view name = "G");

// Sidecar format: {"X": {"given": ["A", "B"], "rows": [[...], ...]}, ...};
// rows run over parent states row-major in the listed order.
CategoricalBn parse_cpts(const nlohmann::json& doc, const ConditionalDag& g, const Cardinalities& cards);
nlohmann::json cpts_to_json(const CategoricalBn& bn);

// {"over": [...], "given": [...], "rows": [[...], ...]}, one row per given
// configuration.
CondTable parse_cond_table(const nlohmann::json& doc, const Cardinalities& cards = {});
nlohmann::json cond_table_to_json(const CondTable& t);

}  // namespace selbn

#endif  // SELBN_GRAPH_IO_HPP_
