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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "selbn/chordal.hpp"
#include "selbn/compelled.hpp"
#include "selbn/constraint.hpp"
#include "selbn/markov_equiv.hpp"
#include "selbn/selection.hpp"
#include "selbn/verify.hpp"
#include "support.hpp"

namespace {

using namespace selbn;
using testing::fixture;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failed = 0;
std::set<int> g_known;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool ok = o.ok && in_time;
  const bool known = !ok && g_known.count(id);
  if (!ok && !known) ++g_failed;
  std::printf("%s criterion %d: %s (%s; %.2f s%s)%s\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              in_time ? "" : ", over budget", known ? " [known failure]" : "");
  std::fflush(stdout);
}

std::string join(const NodeSet& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

// Shared corpus for criteria 2 and 3.
struct Instance {
  Dag g;
  NodeSet targets;
};

std::vector<Instance> dag_corpus() {
  std::mt19937_64 rng(20261016);
  std::vector<Instance> out;
  for (int i = 0; i < 600; ++i) {
    const int n = 2 + i % 5;
    const Dag g = testing::random_dag(rng, n, i % 2 ? 0.3 : 0.5);
    out.push_back({g, testing::random_targets(rng, g, 3)});
  }
  return out;
}

Outcome example7() {
  const Cpdag cp = Cpdag::from_pdag(fixture("fig6a").pdag());
  const NodeSet proper = compelled_ancestors(cp, {"S"}).proper({"S"});
  return {proper == NodeSet{"O1", "O2", "O3"}, "proper compelled set " + join(proper)};
}

Outcome oracle_equivalence(const std::vector<Instance>& corpus) {
  std::size_t mismatches = 0;
  for (const auto& inst : corpus)
    if (compelled_ancestors(cpdag_of(inst.g), inst.targets).compelled != testing::compelled_oracle(inst.g, inst.targets))
      ++mismatches;
  return {mismatches == 0, std::to_string(corpus.size()) + " DAGs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome min_ancestor(const std::vector<Instance>& corpus) {
  std::size_t mismatches = 0;
  for (const auto& inst : corpus) {
    const Dag m = min_ancestor_dag(cpdag_of(inst.g), inst.targets);
    const bool in_class = same_class(m, inst.g) && testing::same_class_oracle(m, inst.g);
    const bool minimal = testing::ancestors_oracle(m.nodes(), m.directed_edges(), inst.targets) ==
                         testing::compelled_oracle(inst.g, inst.targets);
    if (!in_class || !minimal) ++mismatches;
  }
  return {mismatches == 0, std::to_string(corpus.size()) + " DAGs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome witnesses() {
  const std::vector<std::pair<Law, const char*>> cases{{Law::kLemma1, "fig1"},
                                                       {Law::kLemma3, "fig1-sel-child"},
                                                       {Law::kLemma4, "nested-sel"},
                                                       {Law::kThm1, "fig3a"},
                                                       {Law::kThm7, "fig4"}};
  std::size_t failures = 0, checks = 0;
  double worst = 0.0;
  for (const auto& [law, name] : cases) {
    const VerifyReport r = verify_law(law, fixture(name).selection_problem(), 100, 0, 1e-10);
    for (const auto& c : r.checks) {
      ++checks;
      failures += c.failures + (c.trials != 100);
      worst = std::max(worst, c.max_error);
    }
  }
  std::ostringstream d;
  d << checks << " checks x 100 BNs, " << failures << " failures, max error " << worst;
  return {failures == 0 && checks == 8, d.str()};
}

Outcome shm_lemma() {
  const std::vector<NodeSet> pairwise{{"O1", "O2"}, {"O1", "O3"}, {"O2", "O3"}};
  double worst = 0.0;
  bool spec_ok = true;
  for (const char* name : {"fig1", "fig2"}) {
    const ShmReport r = shm_membership_check(fixture(name).selection_problem(), 100, 0);
    spec_ok = spec_ok && r.spec.generators == pairwise && r.trials == 100;
    worst = std::max(worst, r.max_kl);
  }
  const double eps = 0.5;
  std::vector<double> v;
  for (int i = 0; i < 8; ++i) v.push_back((1 + eps * (__builtin_popcount(i) % 2 ? -1 : 1)) / 8.0);
  const std::vector<Variable> vars{{"O1", 2}, {"O2", 2}, {"O3", 2}};
  const double planted = ipf_fit(JointTable(Factor(vars, v)), {vars, pairwise}).kl;
  std::ostringstream d;
  d << "max KL " << worst << " over 200 BNs; planted three-way KL " << planted;
  return {spec_ok && worst <= 1e-8 && planted > 1e-2, d.str()};
}

Outcome lauritzen() {
  const std::vector<Variable> vars{{"O1", 2}, {"O2", 2}, {"O3", 2}};
  const HierarchicalSpec spec{vars, {{"O1", "O2"}, {"O1", "O3"}, {"O2", "O3"}}};
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(derive_seed(0, t));
    const FactorSet fs = random_factor_set(spec, rng);
    const SelectionBn sb = hm_to_selection_bn(fs);
    const Factor got = condition(joint_of(sb.bn), {}, sb.problem.values).factor();
    // Normalised product, cell by cell.
    std::vector<double> want(8);
    double z = 0.0;
    for (int i = 0; i < 8; ++i) {
      const Assignment a{{"O1", i >> 2 & 1}, {"O2", i >> 1 & 1}, {"O3", i & 1}};
      want[i] = 1.0;
      for (const auto& f : fs.factors) want[i] *= f.at(a);
      z += want[i];
    }
    for (int i = 0; i < 8; ++i) {
      const Assignment a{{"O1", i >> 2 & 1}, {"O2", i >> 1 & 1}, {"O3", i & 1}};
      worst = std::max(worst, std::abs(got.at(a) - want[i] / z));
    }
  }
  std::ostringstream d;
  d << "50 factor sets, max error " << worst;
  return {worst <= 1e-10, d.str()};
}

Outcome example6() {
  const Cardinalities cards{{"O1", 2}, {"O2", 2}, {"O3", 2}, {"O4", 2}};
  std::size_t consistent = 0, recovered = 0, small = 0;
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const JointTable p = joint_of(random_bn(constraint_graph(), cards, derive_seed(1, t)));
    double truth = 0.0;
    for (std::size_t i = 0; i < p.values().size(); ++i)
      if (p.factor().assignment_at(i).at("O4") == 0) truth += p.values()[i];
    const MembershipVerdict v = solve_membership(build_system(condition(p, {"O4"}, {})));
    consistent += v.consistent;
    bool hit = false;
    for (const auto& r : v.roots) hit = hit || std::abs(r[0] - truth) <= 1e-7;
    recovered += hit;
    small += std::abs(v.resultant_value) <= 1e-9;
    worst = std::max(worst, std::abs(v.resultant_value));
  }
  std::mt19937_64 rng(2);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::size_t generic_rejected = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(16);
    for (int l = 0; l < 2; ++l) {
      double s = 0.0;
      for (int i = 0; i < 8; ++i) s += (v[8 * l + i] = gamma(rng));
      for (int i = 0; i < 8; ++i) v[8 * l + i] /= s;
    }
    const CondTable q({{"O4", 2}}, {{"O1", 2}, {"O2", 2}, {"O3", 2}}, v);
    generic_rejected += !solve_membership(build_system(q)).consistent;
  }
  std::ostringstream d;
  d << "forward " << consistent << "/200 consistent, " << recovered << "/200 recovered, " << small
    << "/200 resultant <= 1e-9 (max " << worst << "); generic " << generic_rejected << "/200 rejected";
  return {consistent == 200 && recovered == 200 && small == 200 && generic_rejected >= 190, d.str()};
}

Outcome structural() {
  std::mt19937_64 rng(8);
  std::size_t instances = 0, cycles = 0;
  std::size_t not_chordal = 0, meek = 0, cover_mismatch = 0, not_tree = 0, unshielded_cycle = 0;
  for (int i = 0; i < 300; ++i, ++instances) {
    const Dag g = testing::random_dag(rng, 3 + i % 6, i % 2 ? 0.3 : 0.5);
    const Pdag p = cpdag_of(g).pdag();
    if (!testing::chordal_oracle(undirected_part(p))) ++not_chordal;
    // No X -> Y - Z with X, Z nonadjacent.
    for (const auto& [x, y] : p.directed_edges())
      for (const auto& z : p.neighbors(y))
        if (z != x && !p.adjacent(x, z)) ++meek;
    for (const auto& x : p.nodes()) {
      const Pdag t = unshielded_undirected_path_tree(p, x);
      const auto cover = testing::unshielded_paths_from(p, x);
      const auto edges = t.undirected_edges();
      if (t.node_set() != cover.nodes || std::set<NodeEdge>(edges.begin(), edges.end()) != cover.edges)
        ++cover_mismatch;
      if (edges.size() + 1 != t.size()) ++not_tree;
    }
  }
  for (int i = 0; i < 300; ++i, ++instances) {
    const Pdag u = testing::random_chordal(rng, 4 + i % 5, 0.45);
    if (!testing::chordal_oracle(u)) ++not_chordal;
    for (const auto& c : testing::simple_cycles(u)) {
      ++cycles;
      if (testing::shielded_triples(u, c) < 2) ++unshielded_cycle;
    }
  }
  const std::size_t violations = not_chordal + meek + cover_mismatch + not_tree + unshielded_cycle;
  std::ostringstream d;
  d << instances << " instances, " << cycles << " cycles; violations: chordality " << not_chordal << ", meek closure "
    << meek << ", path cover " << cover_mismatch << ", tree-ness " << not_tree << ", cycle shielded triples "
    << unshielded_cycle;
  return {violations == 0 && instances >= 300, d.str()};
}

}  // namespace

// --known-failure N: criterion N still prints FAIL but does not count
// towards the exit status.
int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--known-failure") g_known.insert(std::atoi(argv[++i]));
  criterion(1, "compelled ancestors of S in the fig6a CPDAG", 1.0, example7);
  const auto corpus = dag_corpus();
  criterion(2, "compelled ancestors agree with the class-enumeration oracle", 60.0,
            [&] { return oracle_equivalence(corpus); });
  criterion(3, "minimal-ancestor DAG stays in the class and realises the compelled set", 0.0,
            [&] { return min_ancestor(corpus); });
  criterion(4, "witness constructors reproduce their distribution equalities", 60.0, witnesses);
  criterion(5, "selected distributions of fig1 and fig2 lie in the pairwise model", 0.0, shm_lemma);
  criterion(6, "hierarchical models round-trip through selection BNs", 0.0, lauritzen);
  criterion(7, "fig4 constraint separates forward and generic conditionals", 30.0, example6);
  criterion(8, "structural properties of CPDAGs and chordal graphs", 0.0, structural);
  return g_failed;
}
