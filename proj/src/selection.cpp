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

#include "selbn/selection.hpp"

#include <algorithm>

#include "selbn/compelled.hpp"
#include "selbn/error.hpp"
#include "selbn/markov_equiv.hpp"

namespace selbn {
namespace {

NodeSet minus(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool subset(const NodeSet& a, const NodeSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void require_sinks(const SelectionProblem& sp) {
  if (!selection_nodes_are_sinks(sp)) fail(ErrorCode::kPrecondition, "selection nodes must be sinks");
}

}  // namespace

void SelectionProblem::validate() const {
  const NodeSet nodes = graph.node_set();
  NodeSet seen;
  for (const auto* part : {&observed, &conditioning, &selection})
    for (const auto& n : *part) {
      if (!nodes.count(n)) fail(ErrorCode::kInvalidArgument, "role set names unknown node '" + n + "'");
      if (!seen.insert(n).second) fail(ErrorCode::kInvalidArgument, "node '" + n + "' has two roles");
    }
  if (seen != nodes) fail(ErrorCode::kInvalidArgument, "every node needs exactly one role");
  for (const auto& n : graph.nodes()) {
    auto it = cards.find(n);
    if (it == cards.end() || it->second < 1) fail(ErrorCode::kInvalidArgument, "missing cardinality for '" + n + "'");
  }
  if (values.size() != selection.size()) fail(ErrorCode::kInvalidArgument, "selected values must cover exactly S");
  for (const auto& [name, value] : values) {
    if (!selection.count(name)) fail(ErrorCode::kInvalidArgument, "value given for non-selection node '" + name + "'");
    if (value < 0 || value >= cards.at(name))
      fail(ErrorCode::kInvalidArgument, "selected value out of range for '" + name + "'");
  }
}

NodeSet SelectionProblem::unselected() const {
  NodeSet out = observed;
  out.insert(conditioning.begin(), conditioning.end());
  return out;
}

std::vector<Variable> SelectionProblem::variables(const NodeSet& nodes) const {
  std::vector<Variable> out;
  for (const auto& n : graph.nodes())
    if (nodes.count(n)) out.push_back({n, cards.at(n)});
  return out;
}

SelectionProblem SelectionProblem::with_graph(Dag g) const {
  SelectionProblem out;
  const NodeSet keep = g.node_set();
  auto filter = [&](const NodeSet& s) {
    NodeSet r;
    for (const auto& n : s)
      if (keep.count(n)) r.insert(n);
    return r;
  };
  out.observed = filter(observed);
  out.conditioning = filter(conditioning);
  out.selection = filter(selection);
  for (const auto& [n, v] : values)
    if (keep.count(n)) out.values[n] = v;
  for (const auto& [n, c] : cards)
    if (keep.count(n)) out.cards[n] = c;
  out.graph = std::move(g);
  return out;
}

bool selection_nodes_are_sinks(const SelectionProblem& sp) {
  for (const auto& s : sp.selection)
    if (!sp.graph.children(s).empty()) return false;
  return true;
}

SelectionProblem drop_selection_out_edges(const SelectionProblem& sp) {
  sp.validate();
  EdgeList kept;
  for (const auto& e : sp.graph.directed_edges())
    if (!sp.selection.count(e.first)) kept.push_back(e);
  return sp.with_graph(Dag(sp.graph.nodes(), kept));
}

SelectionProblem drop_nested_selection(const SelectionProblem& sp, std::vector<NestedDrop>* log) {
  sp.validate();
  require_sinks(sp);
  SelectionProblem cur = sp;
  for (;;) {
    std::optional<NestedDrop> drop;
    for (const auto& s2 : cur.selection) {
      const NodeSet pa2 = cur.graph.parents(s2);
      for (const auto& s1 : cur.selection) {
        if (s1 == s2) continue;
        const NodeSet pa1 = cur.graph.parents(s1);
        if (subset(pa2, pa1) && (pa2 != pa1 || s2 > s1)) {
          drop = NestedDrop{s2, s1};
          break;
        }
      }
      if (drop) break;
    }
    if (!drop) return cur;
    if (log) log->push_back(*drop);
    cur = cur.with_graph(induced_subgraph(cur.graph, minus(cur.graph.node_set(), {drop->dropped})));
  }
}

Restriction restrict_to_ancestors(const SelectionProblem& sp) {
  sp.validate();
  require_sinks(sp);
  const NodeSet x = ancestors(sp.graph, sp.selection);
  Restriction r;
  r.core = sp.with_graph(induced_subgraph(sp.graph, x));
  r.rest = fix(induced_subgraph(sp.graph, sp.unselected()), minus(x, sp.selection));
  return r;
}

ReductionReport reduce_full(const SelectionProblem& sp, bool use_compelled) {
  sp.validate();
  ReductionReport report;
  SelectionProblem cur = sp;

  auto sinks = [&] {
    SelectionProblem next = drop_selection_out_edges(cur);
    if (!(next.graph == cur.graph))
      report.steps.push_back({"sinks", cur.graph, next.graph, {}, next.selection});
    cur = std::move(next);
  };
  auto nested = [&] {
    std::vector<NestedDrop> log;
    SelectionProblem next = drop_nested_selection(cur, &log);
    if (!log.empty()) {
      NodeSet dropped;
      for (const auto& d : log) dropped.insert(d.dropped);
      report.steps.push_back({"nested", cur.graph, next.graph, dropped, next.selection});
    }
    cur = std::move(next);
  };

  sinks();
  nested();
  if (use_compelled && !cur.selection.empty()) {
    const Cpdag cp = cpdag_of(cur.graph);
    const NodeSet comp = compelled_ancestors(cp, cur.selection).compelled;
    Dag g = min_ancestor_dag(cp, cur.selection);
    if (!(g == cur.graph)) {
      report.steps.push_back({"compelled", cur.graph, g, minus(cur.graph.node_set(), comp), comp});
      cur = cur.with_graph(std::move(g));
      sinks();
      nested();
    }
  }

  Restriction r = restrict_to_ancestors(cur);
  const NodeSet kept = r.core.graph.node_set();
  report.steps.push_back({"ancestors", cur.graph, r.core.graph, minus(cur.graph.node_set(), kept), kept});
  if (r.core.selection.size() == 1) {
    const std::string& s = *r.core.selection.begin();
    NodeSet pa = r.core.graph.parents(s);
    report.steps.push_back({"single-selection-conditioning", r.core.graph,
                            induced_subgraph(r.core.graph, minus(kept, {s})), {s}, pa});
    report.conditioning_target = std::move(pa);
  }
  report.final_problem = std::move(r.core);
  report.conditional_part = std::move(r.rest);
  return report;
}

HierarchicalSpec shm_of(const SelectionProblem& sp) {
  sp.validate();
  const NodeSet o = sp.unselected();
  std::vector<NodeSet> families;
  for (const auto& x : sp.graph.nodes()) {
    NodeSet fa = sp.graph.parents(x);
    fa.insert(x);
    NodeSet kept;
    for (const auto& n : fa)
      if (o.count(n)) kept.insert(n);
    families.push_back(std::move(kept));
  }
  return HierarchicalSpec{sp.variables(o), maximal_sets(families)};
}

void FactorSet::validate() const {
  spec.validate();
  if (factors.size() != spec.generators.size()) fail(ErrorCode::kInvalidArgument, "need one factor per generator");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    NodeSet names;
    for (const auto& v : factors[i].vars()) {
      auto it = std::find_if(spec.variables.begin(), spec.variables.end(),
                             [&](const Variable& w) { return w.name == v.name; });
      if (it == spec.variables.end() || it->card != v.card)
        fail(ErrorCode::kInvalidArgument, "factor variable '" + v.name + "' does not match the specification");
      names.insert(v.name);
    }
    if (names != spec.generators[i]) fail(ErrorCode::kInvalidArgument, "factor does not match its generator");
  }
}

JointTable FactorSet::distribution() const {
  validate();
  Factor prod;
  for (const auto& f : factors) prod = prod.product(f);
  std::vector<std::string> order;
  for (const auto& v : spec.variables) order.push_back(v.name);
  prod = prod.reorder(order);
  const double total = prod.sum();
  if (!(total > 0.0)) fail(ErrorCode::kInvalidArgument, "factor product is identically zero");
  return JointTable(prod.scaled(1.0 / total));
}

FactorSet random_factor_set(const HierarchicalSpec& spec, Rng& rng) {
  spec.validate();
  FactorSet fs{spec, {}};
  for (const auto& gen : spec.generators) {
    std::vector<Variable> vars;
    for (const auto& v : spec.variables)
      if (gen.count(v.name)) vars.push_back(v);
    std::vector<double> values(table_size(vars));
    for (auto& x : values) x = 0.1 + 0.9 * rng.uniform();
    fs.factors.emplace_back(std::move(vars), std::move(values));
  }
  return fs;
}

SelectionBn hm_to_selection_bn(const FactorSet& fs) {
  fs.validate();
  std::vector<std::string> nodes;
  Cardinalities cards;
  NodeSet taken;
  std::map<std::string, CondTable> cpts;
  SelectionProblem sp;
  for (const auto& v : fs.spec.variables) {
    nodes.push_back(v.name);
    cards[v.name] = v.card;
    taken.insert(v.name);
    sp.observed.insert(v.name);
    cpts.emplace(v.name, CondTable({}, {v}, std::vector<double>(static_cast<std::size_t>(v.card), 1.0 / v.card)));
  }
  EdgeList edges;
  for (std::size_t i = 0; i < fs.factors.size(); ++i) {
    std::string s = "S" + std::to_string(i + 1);
    while (taken.count(s)) s += "_";
    taken.insert(s);
    nodes.push_back(s);
    cards[s] = 2;
    sp.selection.insert(s);
    sp.values[s] = 0;

    const Factor& f = fs.factors[i];
    const double top = f.max_value();
    if (!(top > 0.0)) fail(ErrorCode::kInvalidArgument, "factor " + std::to_string(i + 1) + " is all zero");
    std::vector<double> values;
    for (double phi : f.values()) {
      const double hit = phi / top;
      values.push_back(hit);
      values.push_back(1.0 - hit);
    }
    for (const auto& v : f.vars()) edges.push_back({v.name, s});
    cpts.emplace(s, CondTable(f.vars(), {{s, 2}}, std::move(values)));
  }
  Dag g(nodes, edges);
  sp.cards = cards;
  sp.graph = g;
  return SelectionBn{CategoricalBn(g, std::move(cards), std::move(cpts)), std::move(sp)};
}

ShmReport shm_membership_check(const SelectionProblem& sp, std::size_t trials, std::uint64_t seed, double floor) {
  ShmReport report;
  report.spec = shm_of(sp);
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const CategoricalBn bn = random_bn(sp.graph, sp.cards, derive_seed(seed, t), floor);
    const JointTable p = condition(joint_of(bn), {}, sp.values).as_joint();
    const IpfResult fit = ipf_fit(p, report.spec);
    report.max_kl = std::max(report.max_kl, fit.kl);
    report.max_iterations = std::max(report.max_iterations, fit.iterations);
  }
  return report;
}

}  // namespace selbn
