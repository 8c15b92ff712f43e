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

#include "selbn/witness.hpp"

#include <algorithm>

#include "selbn/error.hpp"

namespace selbn {
namespace {

NodeSet minus(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Cardinalities cards_of(const SelectionProblem& sp, const NodeSet& nodes) {
  Cardinalities out;
  for (const auto& n : nodes) out[n] = sp.cards.at(n);
  return out;
}

// Row r puts hat[r] on the selected state and spreads the rest evenly.
CondTable selected_row_cpt(std::vector<Variable> given, const Variable& node, int selected,
                           const std::vector<double>& hat) {
  std::vector<double> values;
  const int k = node.card;
  for (double h : hat) {
    h = std::clamp(h, 0.0, 1.0);
    for (int s = 0; s < k; ++s) values.push_back(s == selected ? (k == 1 ? 1.0 : h) : (1.0 - h) / (k - 1));
  }
  return CondTable(std::move(given), {node}, std::move(values));
}

std::vector<std::string> names_of(const std::vector<Variable>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

void require_graph(const CategoricalBn& bn, const Pdag& g, const char* what) {
  if (!(bn.dag() == g)) fail(ErrorCode::kPrecondition, std::string(what) + " is not parameterised on the expected graph");
}

void require_sink_selection(const SelectionProblem& sp) {
  sp.validate();
  if (!selection_nodes_are_sinks(sp)) fail(ErrorCode::kPrecondition, "selection nodes must be sinks");
}

void require_selection_node(const SelectionProblem& sp, const std::string& s) {
  if (!sp.selection.count(s)) fail(ErrorCode::kPrecondition, "'" + s + "' is not a selection node");
}

}  // namespace

CategoricalBn witness_lemma3(const CategoricalBn& q, const SelectionProblem& sp) {
  sp.validate();
  require_graph(q, sp.graph, "Q");
  const SelectionProblem reduced = drop_selection_out_edges(sp);
  std::map<std::string, CondTable> cpts;
  for (const auto& node : sp.graph.nodes()) {
    const CondTable& c = q.cpt(node);
    Assignment fixed;
    for (const auto& v : c.given())
      if (sp.selection.count(v.name)) fixed[v.name] = sp.values.at(v.name);
    Factor f = c.factor().reduce(fixed);
    std::vector<Variable> given(f.vars().begin(), f.vars().end() - 1);
    cpts.emplace(node, CondTable(std::move(given), std::move(f)));
  }
  return CategoricalBn(reduced.graph, sp.cards, std::move(cpts));
}

CategoricalBn witness_lemma4_fwd(const CategoricalBn& q_reduced, const SelectionProblem& sp, const std::string& s2) {
  require_sink_selection(sp);
  require_selection_node(sp, s2);
  require_graph(q_reduced, induced_subgraph(sp.graph, minus(sp.graph.node_set(), {s2})), "Q'");
  std::map<std::string, CondTable> cpts = q_reduced.cpts();
  std::vector<Variable> pa;
  for (auto i : sp.graph.parent_indices(sp.graph.index(s2))) pa.push_back({sp.graph.name(i), sp.cards.at(sp.graph.name(i))});
  const std::size_t rows = table_size(pa);
  cpts.emplace(s2, selected_row_cpt(pa, {s2, sp.cards.at(s2)}, sp.values.at(s2), std::vector<double>(rows, 1.0)));
  return CategoricalBn(sp.graph, sp.cards, std::move(cpts));
}

CategoricalBn witness_lemma4_rev(const CategoricalBn& q, const SelectionProblem& sp, const std::string& s1,
                                 const std::string& s2) {
  require_sink_selection(sp);
  require_selection_node(sp, s1);
  require_selection_node(sp, s2);
  require_graph(q, sp.graph, "Q");
  const NodeSet pa1 = sp.graph.parents(s1), pa2 = sp.graph.parents(s2);
  if (s1 == s2 || !std::includes(pa1.begin(), pa1.end(), pa2.begin(), pa2.end()))
    fail(ErrorCode::kPrecondition, "pa(" + s2 + ") must be contained in pa(" + s1 + ")");

  const Factor f1 = q.cpt(s1).factor().reduce({{s1, sp.values.at(s1)}});
  const Factor f2 = q.cpt(s2).factor().reduce({{s2, sp.values.at(s2)}});
  const Factor hat = f1.product(f2);

  std::map<std::string, CondTable> cpts;
  for (const auto& [node, cpt] : q.cpts())
    if (node != s1 && node != s2) cpts.emplace(node, cpt);
  cpts.emplace(s1, selected_row_cpt(hat.vars(), {s1, sp.cards.at(s1)}, sp.values.at(s1), hat.values()));
  const Dag g = induced_subgraph(sp.graph, minus(sp.graph.node_set(), {s2}));
  Cardinalities cards = sp.cards;
  cards.erase(s2);
  return CategoricalBn(g, std::move(cards), std::move(cpts));
}

namespace {

struct Parts {
  NodeSet x, y;
  Dag g1;
  ConditionalDag g2;
};

Parts ancestral_parts(const SelectionProblem& sp) {
  Parts p;
  p.x = ancestors(sp.graph, sp.selection);
  p.y = minus(sp.unselected(), p.x);
  p.g1 = induced_subgraph(sp.graph, p.x);
  p.g2 = fix(induced_subgraph(sp.graph, sp.unselected()), minus(p.x, sp.selection));
  return p;
}

}  // namespace

AncestralSplit witness_thm1_fwd(const CategoricalBn& q, const SelectionProblem& sp) {
  require_sink_selection(sp);
  require_graph(q, sp.graph, "Q");
  const Parts parts = ancestral_parts(sp);
  const NodeSet xs = minus(parts.x, sp.selection);
  const Factor selected = joint_of(q).factor().reduce(sp.values).marginal(names_of(sp.variables(xs)));
  for (double v : selected.values())
    if (!(v > 0.0)) fail(ErrorCode::kNotPositive, "q(x \\ s, selected values) must be positive");

  std::map<std::string, CondTable> c1, c2;
  for (const auto& n : parts.x) c1.emplace(n, q.cpt(n));
  for (const auto& n : parts.y) c2.emplace(n, q.cpt(n));
  return AncestralSplit{CategoricalBn(parts.g1, cards_of(sp, parts.x), std::move(c1)),
                        CategoricalBn(parts.g2, cards_of(sp, sp.unselected()), std::move(c2))};
}

CategoricalBn witness_thm1_rev(const CategoricalBn& q1, const CategoricalBn& p2, const SelectionProblem& sp) {
  require_sink_selection(sp);
  const Parts parts = ancestral_parts(sp);
  require_graph(q1, parts.g1, "Q1");
  if (!(p2.graph() == parts.g2)) fail(ErrorCode::kPrecondition, "P2 is not parameterised on the conditional part");
  std::map<std::string, CondTable> cpts;
  for (const auto& n : parts.x) cpts.emplace(n, q1.cpt(n));
  for (const auto& n : parts.y) cpts.emplace(n, p2.cpt(n));
  return CategoricalBn(sp.graph, sp.cards, std::move(cpts));
}

namespace {

const std::string& single_selection(const SelectionProblem& sp) {
  require_sink_selection(sp);
  if (sp.selection.size() != 1) fail(ErrorCode::kPrecondition, "exactly one selection node is required");
  return *sp.selection.begin();
}

}  // namespace

CategoricalBn witness_thm7_fwd(const CategoricalBn& q, const SelectionProblem& sp) {
  const std::string& s = single_selection(sp);
  require_graph(q, sp.graph, "Q");
  const auto pa = names_of(sp.variables(sp.graph.parents(s)));
  const JointTable p = condition(joint_of(q), {}, sp.values).as_joint();
  const Factor p_pa = p.factor().marginal(pa);
  for (double v : p_pa.values())
    if (!(v > 0.0)) fail(ErrorCode::kNotPositive, "p(pa(S)) must be positive");

  const NodeSet o = sp.unselected();
  std::map<std::string, CondTable> cpts;
  for (const auto& n : o) cpts.emplace(n, q.cpt(n));
  return CategoricalBn(induced_subgraph(sp.graph, o), cards_of(sp, o), std::move(cpts));
}

SelectionWitness witness_thm7_rev(const JointTable& p, const CategoricalBn& q, const SelectionProblem& sp) {
  const std::string& s = single_selection(sp);
  const NodeSet o = sp.unselected();
  require_graph(q, induced_subgraph(sp.graph, o), "Q");
  const auto pa_vars = sp.variables(sp.graph.parents(s));
  const auto pa = names_of(pa_vars);

  const Factor pp = p.factor().marginal(pa);
  const Factor qp = joint_of(q).factor().marginal(pa);
  std::vector<double> ratio(pp.size());
  double top = 0.0;
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    if (!(qp.values()[i] > 0.0)) fail(ErrorCode::kNotPositive, "q(pa(S)) must be positive");
    ratio[i] = pp.values()[i] / qp.values()[i];
    top = std::max(top, ratio[i]);
  }
  const double c = 1.0 / top;
  for (auto& r : ratio) r *= c;

  std::map<std::string, CondTable> cpts = q.cpts();
  cpts.emplace(s, selected_row_cpt(pa_vars, {s, sp.cards.at(s)}, sp.values.at(s), ratio));
  return SelectionWitness{CategoricalBn(sp.graph, sp.cards, std::move(cpts)), c};
}

}  // namespace selbn
