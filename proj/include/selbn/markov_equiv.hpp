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

// Markov equivalence: CPDAGs, class enumeration, consistent extensions and
// the join-tree order machinery for orienting chordal components.

#ifndef SELBN_MARKOV_EQUIV_HPP_
#define SELBN_MARKOV_EQUIV_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selbn/chordal.hpp"
#include "selbn/graph.hpp"

namespace selbn {

class Cpdag {
 public:
  // Accepts p only if it is the CPDAG of some DAG; throws kInvalidGraph.
  static Cpdag from_pdag(const Pdag& p);

  const Pdag& pdag() const noexcept { return pdag_; }

  friend bool operator==(const Cpdag& a, const Cpdag& b) { return a.pdag_ == b.pdag_; }

 private:
  explicit Cpdag(Pdag p) : pdag_(std::move(p)) {}
  friend Cpdag cpdag_of(const Dag& g);

  Pdag pdag_;
};

// Orients the unshielded colliders of g, then closes under Meek's rules R1-R4.
Cpdag cpdag_of(const Dag& g);

// Throws kPrecondition when the node sets differ.
bool same_class(const Dag& a, const Dag& b);

inline constexpr std::size_t kDefaultEnumerationGuard = 20;

// Every member of g's class, in orientation-bitmask order. Throws
// kGuardExceeded when the CPDAG has more than max_undirected undirected edges.
std::vector<Dag> enumerate_class(const Dag& g, std::size_t max_undirected = kDefaultEnumerationGuard);
std::vector<Dag> enumerate_class(const Cpdag& p, std::size_t max_undirected = kDefaultEnumerationGuard);

// A DAG in the class of p that contains pre_oriented. The remaining edges are
// oriented by sink elimination (a node with no outgoing edge whose undirected
// neighbours are adjacent to all its other neighbours receives all of its
// undirected edges), choosing the lexicographically smallest candidate.
// Throws kNoExtension; kPrecondition if an edge of pre_oriented is not an
// undirected edge of p.
Dag consistent_extension(const Pdag& p, const EdgeList& pre_oriented = {});

struct TreeOrder {
  JoinTree join_tree;
  std::size_t root = 0;
  std::vector<std::size_t> rank;    // distance from the root
  std::vector<std::size_t> parent;  // parent[root] == root
};

// Throws kInvalidArgument if the join tree is not a tree or root is out of range.
TreeOrder tree_order(JoinTree jt, std::size_t root);

// A strict partial order on graph nodes, stored as its transitive closure.
struct NodeOrder {
  std::set<NodeEdge> less;

  bool precedes(const std::string& a, const std::string& b) const { return less.count({a, b}) != 0; }
  // Kahn's algorithm over the given nodes, ties broken lexicographically.
  std::vector<std::string> linear_extension(const std::vector<std::string>& nodes) const;
};

// If clique M1 lies above M2 in the rooted tree, every X in M1 and M2
// precedes every Y in M2 but not in M1. Nodes sharing only the root clique
// stay incomparable.
NodeOrder induced_node_order(const TreeOrder& order);

// Orients every adjacency of u as X -> Y when X comes first in total.
Dag orient_by_total_order(const Pdag& u, const std::vector<std::string>& total);

}  // namespace selbn

#endif  // SELBN_MARKOV_EQUIV_HPP_
