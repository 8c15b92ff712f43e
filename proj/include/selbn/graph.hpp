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

// Directed, partially directed and conditional graphs over named nodes, plus
// the elementary queries (ancestry, induced subgraphs, fixing, colliders).
//
// Graphs are immutable values. Nodes keep their declaration order, which is
// also the variable order used by probability tables; every set-valued query
// returns names in lexicographic order.

#ifndef SELBN_GRAPH_HPP_
#define SELBN_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selbn {

using NodeSet = std::set<std::string>;
using NodeEdge = std::pair<std::string, std::string>;
using EdgeList = std::vector<NodeEdge>;
// (X, Z, Y) with X -> Z <- Y and X < Y.
using Triple = std::array<std::string, 3>;

// Edge state seen from the row node.
enum class Mark : std::uint8_t { kNone, kOut, kIn, kUndirected };

bool is_valid_node_name(std::string_view name) noexcept;

class Pdag {
 public:
  Pdag() = default;
  // Throws kInvalidGraph on self-edges, duplicate pairs, directed cycles or
  // bad names; kUnknownNode when an edge names an undeclared node.
  Pdag(std::vector<std::string> nodes, const EdgeList& directed, const EdgeList& undirected = {});

  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  NodeSet node_set() const { return NodeSet(nodes_.begin(), nodes_.end()); }

  bool contains(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  const std::string& name(std::size_t i) const { return nodes_[i]; }

  Mark mark(std::size_t i, std::size_t j) const { return marks_[i * size() + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return mark(i, j) != Mark::kNone; }
  bool directed(std::size_t i, std::size_t j) const { return mark(i, j) == Mark::kOut; }
  bool undirected(std::size_t i, std::size_t j) const { return mark(i, j) == Mark::kUndirected; }

  bool adjacent(std::string_view a, std::string_view b) const;
  bool has_directed(std::string_view from, std::string_view to) const;
  bool has_undirected(std::string_view a, std::string_view b) const;

  EdgeList directed_edges() const;
  // Each pair once, lexicographically smaller name first.
  EdgeList undirected_edges() const;
  bool has_undirected_edges() const;

  NodeSet parents(std::string_view node) const;
  NodeSet children(std::string_view node) const;
  NodeSet neighbors(std::string_view node) const;  // undirected only
  NodeSet adjacents(std::string_view node) const;

  std::vector<std::size_t> parent_indices(std::size_t i) const;
  std::vector<std::size_t> adjacent_indices(std::size_t i) const;

  // Same node set and same edges; declaration order is ignored.
  friend bool operator==(const Pdag& a, const Pdag& b);

 protected:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Mark> marks_;
};

class Dag : public Pdag {
 public:
  Dag() = default;
  Dag(std::vector<std::string> nodes, const EdgeList& edges);
  // Throws kInvalidGraph if p carries undirected edges.
  static Dag from_pdag(const Pdag& p);

  // Kahn order, ties broken by declaration index.
  std::vector<std::size_t> topological_order() const;
};

// A DAG whose fixed nodes are sources; the random nodes carry distributions.
class ConditionalDag {
 public:
  ConditionalDag() = default;
  ConditionalDag(Dag graph, NodeSet fixed);

  const Dag& graph() const noexcept { return graph_; }
  const NodeSet& fixed_nodes() const noexcept { return fixed_; }
  NodeSet random_nodes() const;
  // Random nodes in declaration order.
  std::vector<std::string> random_in_order() const;
  bool is_fixed(std::string_view node) const { return fixed_.count(std::string(node)) != 0; }

  friend bool operator==(const ConditionalDag& a, const ConditionalDag& b) {
    return a.graph_ == b.graph_ && a.fixed_ == b.fixed_;
  }

 private:
  Dag graph_;
  NodeSet fixed_;
};

// Reflexive-transitive closure over directed edges only.
NodeSet ancestors(const Pdag& g, const NodeSet& targets);
NodeSet descendants(const Pdag& g, const NodeSet& sources);
bool is_ancestral(const Pdag& g, const NodeSet& a);

Pdag induced_subgraph(const Pdag& g, const NodeSet& keep);
Dag induced_subgraph(const Dag& g, const NodeSet& keep);

// Random nodes V \ A; keeps edges inside V \ A and edges from A into V \ A.
ConditionalDag fix(const Dag& g, const NodeSet& a);

Pdag skeleton(const Pdag& g);
// Only the undirected edges of g, over all of g's nodes.
Pdag undirected_part(const Pdag& g);
// Directed edges of g only.
Dag directed_part(const Pdag& g);

std::set<Triple> unshielded_colliders(const Pdag& g);

// Throws kUnknownNode for any name not in g.
void require_nodes(const Pdag& g, const NodeSet& names);

}  // namespace selbn

#endif  // SELBN_GRAPH_HPP_
