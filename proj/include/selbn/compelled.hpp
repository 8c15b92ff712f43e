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

// Compelled ancestors: nodes that are ancestors of a target set in every DAG
// of a Markov equivalence class.

#ifndef SELBN_COMPELLED_HPP_
#define SELBN_COMPELLED_HPP_

#include <cstddef>
#include <optional>

#include "selbn/graph.hpp"
#include "selbn/markov_equiv.hpp"

namespace selbn {

struct CompelledResult {
  NodeSet ancestors_in_cpdag;  // A: ancestors over directed edges
  NodeSet interior_nodes;      // U: interior nodes of qualifying paths
  NodeSet compelled;           // A and U together
  // Largest number of nodes one per-root search entered; never above |V|.
  std::size_t max_visits_per_root = 0;

  // compelled minus the targets themselves.
  NodeSet proper(const NodeSet& targets) const;
};

// Finds A, then walks the tree of unshielded undirected paths out of each
// member of A. A node joins U when another member of A lies beyond it on the
// walk. Iterative; O(|V|^2).
CompelledResult compelled_ancestors(const Cpdag& p, const NodeSet& targets);

// The same set computed straight from the characterisation: A plus every node
// lying inside some unshielded undirected path between two members of A,
// found by enumerating those paths. Exponential; meant as a cross-check.
NodeSet compelled_ancestors_by_paths(const Cpdag& p, const NodeSet& targets);

// Intersection of ancestors(member, targets) over the enumerated class.
NodeSet compelled_ancestors_bruteforce(const Dag& g, const NodeSet& targets,
                                       std::size_t max_undirected = kDefaultEnumerationGuard);

// A class member whose ancestors of targets are exactly the compelled set:
// undirected edges leaving the compelled set are pre-oriented outwards and
// the rest is completed by consistent_extension.
Dag min_ancestor_dag(const Cpdag& p, const NodeSet& targets);

// Takes the edges among a2 from g1 and all other edges from g2. Requires
// same_class(g1, g2) and a2 ancestral in g2 (kPrecondition otherwise). The
// result is checked to be in the class with a2 ancestral; when a1 is given
// and ancestral in g1, a1 & a2 is checked to be ancestral too. The union
// need not be: for A - B - C with g1 = A -> B -> C, a1 = {A}, g2 = C -> B -> A
// and a2 = {C}, no member of the class has {A, C} ancestral.
Dag merge_ancestral(const Dag& g1, const Dag& g2, const NodeSet& a2,
                    const std::optional<NodeSet>& a1 = std::nullopt);

}  // namespace selbn

#endif  // SELBN_COMPELLED_HPP_
