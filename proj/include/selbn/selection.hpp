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

// Selection problems and the graph reductions that shrink them: selection
// sinks, nested selection parents, ancestral restriction and the switch from
// selection to conditioning. Also the selection hierarchical model and the
// hierarchical-model-to-BN construction.

#ifndef SELBN_SELECTION_HPP_
#define SELBN_SELECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selbn/graph.hpp"
#include "selbn/prob.hpp"

namespace selbn {

// A DAG whose nodes split into observed O, conditioning C and selection S,
// with selected values over S.
struct SelectionProblem {
  Dag graph;
  NodeSet observed;
  NodeSet conditioning;
  NodeSet selection;
  Assignment values;
  Cardinalities cards;

  // Throws kInvalidArgument unless O, C, S partition the nodes, values cover
  // exactly S within range and every node has a cardinality.
  void validate() const;
  // O and C together: everything that is not selected.
  NodeSet unselected() const;
  std::vector<Variable> variables(const NodeSet& nodes) const;
  // Keeps only the roles, values and cards of g's nodes.
  SelectionProblem with_graph(Dag g) const;
};

bool selection_nodes_are_sinks(const SelectionProblem& sp);

SelectionProblem drop_selection_out_edges(const SelectionProblem& sp);

struct NestedDrop {
  std::string dropped;
  std::string absorbed_into;
};

// Repeatedly drops S2 when pa(S2) is a subset of pa(S1) for another retained
// S1; on equal parent sets the lexicographically smaller name stays. Throws
// kPrecondition if a selection node has children.
SelectionProblem drop_nested_selection(const SelectionProblem& sp, std::vector<NestedDrop>* log = nullptr);

struct Restriction {
  SelectionProblem core;  // induced on X = an(S)
  ConditionalDag rest;    // X \ S fixed in the graph induced on O
};

// Throws kPrecondition if a selection node has children.
Restriction restrict_to_ancestors(const SelectionProblem& sp);

struct ReductionStep {
  std::string rule;  // sinks, nested, compelled, ancestors, single-selection-conditioning
  Dag before;
  Dag after;
  NodeSet dropped;
  NodeSet retained;
};

struct ReductionReport {
  std::vector<ReductionStep> steps;
  SelectionProblem final_problem;
  ConditionalDag conditional_part;
  // pa(S) when exactly one selection node is left.
  std::optional<NodeSet> conditioning_target;
};

// sinks, nested, optionally compelled re-orientation (followed by sinks and
// nested again when it changed anything), then ancestors. Only steps that
// change the graph are recorded, except ancestors which is always present.
ReductionReport reduce_full(const SelectionProblem& sp, bool use_compelled);

// Generators: inclusion-maximal members of {fa(X) ∩ (O ∪ C) : X in V}.
HierarchicalSpec shm_of(const SelectionProblem& sp);

// A hierarchical distribution given by one nonnegative factor per generator.
struct FactorSet {
  HierarchicalSpec spec;
  std::vector<Factor> factors;  // factors[i] is over spec.generators[i]

  void validate() const;
  // Normalised product; throws kInvalidArgument if it is identically zero.
  JointTable distribution() const;
};

// Random strictly positive factors, entries uniform in [0.1, 1).
FactorSet random_factor_set(const HierarchicalSpec& spec, Rng& rng);

struct SelectionBn {
  CategoricalBn bn;
  SelectionProblem problem;
};

// One binary selection sink per generator with the generator as parents;
// observed CPTs uniform; p(S_i = 0 | f) = phi_i(f) / max phi_i. Throws
// kInvalidArgument on an all-zero factor.
SelectionBn hm_to_selection_bn(const FactorSet& fs);

struct ShmReport {
  HierarchicalSpec spec;
  std::size_t trials = 0;
  double max_kl = 0.0;
  std::size_t max_iterations = 0;
};

// Random positive BNs on sp.graph, conditioned on the selected values and
// fitted to shm_of(sp).
ShmReport shm_membership_check(const SelectionProblem& sp, std::size_t trials, std::uint64_t seed,
                               double floor = kDefaultFloor);

}  // namespace selbn

#endif  // SELBN_SELECTION_HPP_
