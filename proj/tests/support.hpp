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

// Brute-force oracles and random instances shared by the test binaries.
// Nothing here calls the library's own equivalence or ancestor code.

#ifndef SELBN_TESTS_SUPPORT_HPP_
#define SELBN_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "selbn/graph.hpp"
#include "selbn/graph_io.hpp"

namespace selbn::testing {

GraphFile fixture(const std::string& name);

// Nodes V0..V{n-1}; each pair joined with probability p, oriented along a
// random permutation.
Dag random_dag(std::mt19937_64& rng, int n, double p);

// Random graph made chordal by the elimination game over a random order.
Pdag random_chordal(std::mt19937_64& rng, int n, double p);

// Non-empty random subset of g's nodes with at most max_size members.
NodeSet random_targets(std::mt19937_64& rng, const Pdag& g, std::size_t max_size);

std::set<NodeEdge> skeleton_pairs(const Pdag& g);
std::set<Triple> colliders_of(const Pdag& g);
bool acyclic(const std::vector<std::string>& nodes, const EdgeList& edges);

// Every orientation of g's skeleton that is acyclic and has g's unshielded
// colliders.
std::vector<EdgeList> class_by_orientation(const Dag& g);
bool same_class_oracle(const Pdag& a, const Pdag& b);

NodeSet ancestors_oracle(const std::vector<std::string>& nodes, const EdgeList& edges, const NodeSet& targets);
NodeSet compelled_oracle(const Dag& g, const NodeSet& targets);

// Repeated removal of simplicial vertices.
bool chordal_oracle(const Pdag& u);

// Simple cycles of length >= 3 in the skeleton, each listed once.
std::vector<std::vector<std::string>> simple_cycles(const Pdag& u);
// Positions i whose neighbours on the cycle are adjacent in u.
std::size_t shielded_triples(const Pdag& u, const std::vector<std::string>& cycle);

// Nodes and edges on unshielded undirected paths starting at x.
struct PathCover {
  NodeSet nodes;
  std::set<NodeEdge> edges;  // smaller name first
};
PathCover unshielded_paths_from(const Pdag& p, const std::string& x);

}  // namespace selbn::testing

#endif  // SELBN_TESTS_SUPPORT_HPP_
