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

#include "selbn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "selbn/error.hpp"
#include "selbn/prob.hpp"
#include "selbn/witness.hpp"

namespace selbn {
namespace {

constexpr std::pair<Law, const char*> kLawNames[] = {
    {Law::kLemma1, "lemma1"}, {Law::kLemma3, "lemma3"}, {Law::kLemma4, "lemma4"},       {Law::kThm1, "thm1"},
    {Law::kThm7, "thm7"},     {Law::kShm, "shm"},       {Law::kLauritzen, "lauritzen"},
};

NodeSet minus(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<std::string> names_of(const std::vector<Variable>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

CondTable selected(const CategoricalBn& bn, const Assignment& values) { return condition(joint_of(bn), {}, values); }

class Runner {
 public:
  Runner(VerifyReport& report, double tol) : report_(report), tol_(tol) {}

  // Runs body for every trial; a trial that throws (other than on a violated
  // precondition) counts as a failure.
  void run(const std::string& name, std::size_t trials, const std::function<double(std::size_t)>& body) {
    LawCheck check{name, 0, 0, 0.0, tol_};
    for (std::size_t t = 0; t < trials; ++t) {
      double err;
      try {
        err = body(t);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kPrecondition) throw;
        err = std::numeric_limits<double>::infinity();
      }
      ++check.trials;
      if (!(err <= tol_)) ++check.failures;
      if (std::isnan(err) || err > check.max_error) check.max_error = err;
    }
    report_.checks.push_back(std::move(check));
  }

 private:
  VerifyReport& report_;
  double tol_;
};

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::kPrecondition, message);
}

}  // namespace

const char* law_name(Law law) noexcept {
  for (const auto& [l, name] : kLawNames)
    if (l == law) return name;
  return "unknown";
}

std::optional<Law> parse_law(std::string_view name) {
  for (const auto& [l, n] : kLawNames)
    if (name == n) return l;
  return std::nullopt;
}

std::vector<Law> all_laws() {
  std::vector<Law> out;
  for (const auto& [l, n] : kLawNames) out.push_back(l);
  return out;
}

bool VerifyReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.failures == 0; });
}

VerifyReport verify_law(Law law, const SelectionProblem& sp, std::size_t trials, std::uint64_t seed,
                        std::optional<double> tol, double floor) {
  sp.validate();
  VerifyReport report;
  report.law = law;
  Runner runner(report, tol.value_or(law == Law::kShm ? kDefaultShmTolerance : kDefaultWitnessTolerance));
  auto stream = [&](std::size_t t, std::uint64_t k) { return derive_seed(seed, 4 * t + k); };
  const Dag& g = sp.graph;

  switch (law) {
    case Law::kLemma1: {
      require(!sp.selection.empty(), "lemma1 needs a selection node");
      require(sp.unselected().size() >= 2 && !sp.observed.empty(), "lemma1 needs two unselected nodes");
      const std::string s1 = *sp.selection.begin();
      const Assignment a1 = {{s1, sp.values.at(s1)}};
      Assignment a2 = sp.values;
      a2.erase(s1);
      const NodeSet c1 = sp.conditioning;
      const NodeSet c2 = {*sp.observed.begin()};
      NodeSet c12 = c1;
      c12.insert(c2.begin(), c2.end());
      runner.run("commutativity", trials, [&](std::size_t t) {
        const JointTable p = joint_of(random_bn(g, sp.cards, stream(t, 0), floor));
        const CondTable twice = condition(condition(p, c1, a1), c2, a2);
        const CondTable once = condition(p, c12, sp.values);
        return max_abs_diff(twice.factor(), once.factor());
      });
      break;
    }
    case Law::kLemma3: {
      require(!sp.selection.empty(), "lemma3 needs a selection node");
      runner.run("equality", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(g, sp.cards, stream(t, 0), floor);
        const CategoricalBn r = witness_lemma3(q, sp);
        return max_abs_diff(selected(r, sp.values).factor(), selected(q, sp.values).factor());
      });
      break;
    }
    case Law::kLemma4: {
      require(selection_nodes_are_sinks(sp), "lemma4 needs sink selection nodes");
      std::vector<NestedDrop> log;
      drop_nested_selection(sp, &log);
      require(!log.empty(), "lemma4 needs two selection nodes with nested parent sets");
      const std::string s1 = log.front().absorbed_into, s2 = log.front().dropped;
      const SelectionProblem reduced = sp.with_graph(induced_subgraph(g, minus(g.node_set(), {s2})));
      runner.run("forward", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(reduced.graph, reduced.cards, stream(t, 0), floor);
        const CategoricalBn r = witness_lemma4_fwd(q, sp, s2);
        return max_abs_diff(selected(r, sp.values).factor(), selected(q, reduced.values).factor());
      });
      runner.run("reverse", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(g, sp.cards, stream(t, 1), floor);
        const CategoricalBn r = witness_lemma4_rev(q, sp, s1, s2);
        return max_abs_diff(selected(r, reduced.values).factor(), selected(q, sp.values).factor());
      });
      break;
    }
    case Law::kThm1: {
      require(!sp.selection.empty(), "thm1 needs a selection node");
      require(selection_nodes_are_sinks(sp), "thm1 needs sink selection nodes");
      const Restriction parts = restrict_to_ancestors(sp);
      const NodeSet x = parts.core.graph.node_set();
      const auto xs = names_of(sp.variables(minus(x, sp.selection)));
      const NodeSet xs_set(xs.begin(), xs.end());
      runner.run("forward", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(g, sp.cards, stream(t, 0), floor);
        const JointTable p = selected(q, sp.values).as_joint();
        const AncestralSplit split = witness_thm1_fwd(q, sp);
        const double e1 = max_abs_diff(selected(split.r1, sp.values).factor(), p.marginal(xs).factor());
        const double e2 = max_abs_diff(conditional_joint_of(split.r2).factor(), condition(p, xs_set, {}).factor());
        return std::max(e1, e2);
      });
      runner.run("reverse", trials, [&](std::size_t t) {
        const CategoricalBn q1 = random_bn(parts.core.graph, sp.cards, stream(t, 1), floor);
        const CategoricalBn p2 = random_bn(parts.rest, sp.cards, stream(t, 2), floor);
        const CategoricalBn r = witness_thm1_rev(q1, p2, sp);
        const Factor expected = selected(q1, sp.values).factor().product(conditional_joint_of(p2).factor());
        return max_abs_diff(selected(r, sp.values).factor(), expected);
      });
      break;
    }
    case Law::kThm7: {
      require(sp.selection.size() == 1, "thm7 needs exactly one selection node");
      require(selection_nodes_are_sinks(sp), "thm7 needs a sink selection node");
      const std::string s = *sp.selection.begin();
      const auto pa_vars = sp.variables(g.parents(s));
      const auto pa = names_of(pa_vars);
      const NodeSet pa_set(pa.begin(), pa.end());
      const NodeSet o = sp.unselected();
      const Dag g_o = induced_subgraph(g, o);
      std::vector<std::string> o_order;
      for (const auto& n : g.nodes())
        if (o.count(n)) o_order.push_back(n);
      runner.run("forward", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(g, sp.cards, stream(t, 0), floor);
        const JointTable p = selected(q, sp.values).as_joint();
        const CategoricalBn r = witness_thm7_fwd(q, sp);
        return max_abs_diff(condition(p, pa_set, {}).factor(), condition(joint_of(r), pa_set, {}).factor());
      });
      runner.run("reverse", trials, [&](std::size_t t) {
        const CategoricalBn q = random_bn(g_o, sp.cards, stream(t, 1), floor);
        Rng rng(stream(t, 2));
        const JointTable m = random_joint(pa_vars, rng);
        const JointTable p(m.factor().product(condition(joint_of(q), pa_set, {}).factor()).reorder(o_order));
        const SelectionWitness w = witness_thm7_rev(p, q, sp);
        const JointTable rj = joint_of(w.r);
        const double mass = rj.factor().reduce(sp.values).sum();
        const double e_cond = max_abs_diff(condition(rj, {}, sp.values).factor(), p.factor());
        return std::max(e_cond, std::abs(mass - w.c));
      });
      break;
    }
    case Law::kShm: {
      const HierarchicalSpec spec = shm_of(sp);
      runner.run("kl", trials, [&](std::size_t t) {
        const JointTable p = selected(random_bn(g, sp.cards, stream(t, 0), floor), sp.values).as_joint();
        return ipf_fit(p, spec).kl;
      });
      break;
    }
    case Law::kLauritzen: {
      const HierarchicalSpec spec = shm_of(sp);
      runner.run("round-trip", trials, [&](std::size_t t) {
        Rng rng(stream(t, 0));
        const FactorSet fs = random_factor_set(spec, rng);
        const SelectionBn sb = hm_to_selection_bn(fs);
        return max_abs_diff(selected(sb.bn, sb.problem.values).factor(), fs.distribution().factor());
      });
      break;
    }
  }
  return report;
}

}  // namespace selbn
