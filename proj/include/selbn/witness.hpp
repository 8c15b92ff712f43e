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

// Witness constructors: given a distribution on one graph, build the
// distribution on the reduced (or original) graph whose selected conditional
// matches it. Rows of a selection CPT that no equality pins down share the
// leftover mass uniformly.

#ifndef SELBN_WITNESS_HPP_
#define SELBN_WITNESS_HPP_

#include <string>

#include "selbn/prob.hpp"
#include "selbn/selection.hpp"

namespace selbn {

// Q on sp.graph -> R on sp.graph without edges out of S, with
// r(x | pa') = q(x | pa', selected parents at their values).
CategoricalBn witness_lemma3(const CategoricalBn& q, const SelectionProblem& sp);

// sp.graph has sink selection nodes with pa(s2) inside pa(s1).
// Forward: Q' on sp.graph minus s2 -> R on sp.graph with r(s2 = value | pa) = 1.
CategoricalBn witness_lemma4_fwd(const CategoricalBn& q_reduced, const SelectionProblem& sp, const std::string& s2);
// Reverse: Q on sp.graph -> R on sp.graph minus s2 with
// r(s1 = value | pa) = q(s1 = value | pa) q(s2 = value | pa(s2)).
CategoricalBn witness_lemma4_rev(const CategoricalBn& q, const SelectionProblem& sp, const std::string& s1,
                                 const std::string& s2);

struct AncestralSplit {
  CategoricalBn r1;  // on the graph induced by X = an(S)
  CategoricalBn r2;  // on X \ S fixed in the graph induced by O
};

// Q on sp.graph (sink selection nodes) -> CPT restrictions to both parts.
// Throws kNotPositive unless q(x \ s, selected values) > 0 everywhere.
AncestralSplit witness_thm1_fwd(const CategoricalBn& q, const SelectionProblem& sp);
// Q1 on the ancestral part and P2 on the conditional part -> R on sp.graph.
CategoricalBn witness_thm1_rev(const CategoricalBn& q1, const CategoricalBn& p2, const SelectionProblem& sp);

// Single sink selection node. Q on sp.graph -> R on the graph induced by O.
// Throws kNotPositive unless the selected conditional is positive on pa(S).
CategoricalBn witness_thm7_fwd(const CategoricalBn& q, const SelectionProblem& sp);

struct SelectionWitness {
  CategoricalBn r;
  double c = 0.0;  // r(S = value)
};

// p over O, Q on the graph induced by O with matching conditionals given
// pa(S) -> R on sp.graph with r(s | pa) = c p(pa) / q(pa), c = 1 / max p/q.
// Throws kNotPositive if q(pa) vanishes somewhere.
SelectionWitness witness_thm7_rev(const JointTable& p, const CategoricalBn& q, const SelectionProblem& sp);

}  // namespace selbn

#endif  // SELBN_WITNESS_HPP_
