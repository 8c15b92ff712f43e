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

// Chordality, maximal cliques, join trees, and the tree of unshielded
// undirected paths rooted at a node of a CPDAG.

#ifndef SELBN_CHORDAL_HPP_
#define SELBN_CHORDAL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "selbn/graph.hpp"

namespace selbn {

// The functions below look only at adjacency, so any Pdag is read as its
// skeleton.
bool is_chordal(const Pdag& u);

// Bron-Kerbosch with pivoting. Sorted lexicographically.
std::vector<NodeSet> maximal_cliques(const Pdag& u);

struct JoinTree {
  std::vector<NodeSet> cliques;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
  bool is_tree() const;
  // Clique indices on the tree path from a to b, both ends included.
  std::vector<std::size_t> path(std::size_t a, std::size_t b) const;
  bool has_running_intersection() const;
};

// Maximum-weight spanning tree over clique-intersection sizes. Throws
// kNotChordal.
JoinTree join_tree(const Pdag& u);

// The subgraph made of the nodes and edges lying on unshielded undirected
// paths that start at x. Shielding is judged against all adjacencies of p.
// Not always a tree: in the diamond x-a, x-b, a-b, a-c, b-c the paths
// x-a-c and x-b-c close the cycle x-a-c-b.
Pdag unshielded_undirected_path_tree(const Pdag& p, const std::string& x);

}  // namespace selbn

#endif  // SELBN_CHORDAL_HPP_
