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

#include "selbn/compelled.hpp"

#include <algorithm>
#include <vector>

#include "selbn/error.hpp"

namespace selbn {

NodeSet CompelledResult::proper(const NodeSet& targets) const {
  NodeSet out;
  std::set_difference(compelled.begin(), compelled.end(), targets.begin(), targets.end(),
                      std::inserter(out, out.end()));
  return out;
}

CompelledResult compelled_ancestors(const Cpdag& cp, const NodeSet& targets) {
  const Pdag& p = cp.pdag();
  require_nodes(p, targets);
  const std::size_t n = p.size();

  CompelledResult result;
  result.ancestors_in_cpdag = ancestors(p, targets);
  std::vector<bool> in_a(n, false);
  for (const auto& v : result.ancestors_in_cpdag) in_a[p.index(v)] = true;

  std::vector<std::vector<std::size_t>> adj_u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.undirected(i, j)) adj_u[i].push_back(j);

  // Z ranges over adj_U(node) minus adj_U(prev) and prev itself.
  auto step_candidates = [&](std::size_t prev, std::size_t node) {
    std::vector<std::size_t> out;
    for (auto z : adj_u[node])
      if (z != prev && !p.undirected(prev, z)) out.push_back(z);
    return out;
  };

  struct Frame {
    std::size_t node;
    std::vector<std::size_t> candidates;
    std::size_t next = 0;
    bool found = false;
  };

  std::vector<bool> interior(n, false);
  std::vector<bool> on_path(n, false);
  for (const auto& root_name : result.ancestors_in_cpdag) {
    const std::size_t root = p.index(root_name);
    std::size_t visits = 0;
    on_path[root] = true;
    for (auto first : adj_u[root]) {
      // The found flag of the top-level call is not needed: root is in A.
      std::vector<Frame> stack;
      stack.push_back({first, step_candidates(root, first)});
      on_path[first] = true;
      ++visits;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < f.candidates.size()) {
          const std::size_t z = f.candidates[f.next++];
          if (in_a[z]) {
            f.found = true;
          } else if (!on_path[z]) {
            const std::size_t node = f.node;
            stack.push_back({z, step_candidates(node, z)});
            on_path[z] = true;
            ++visits;
          }
          continue;
        }
        const bool found = f.found;
        if (found) interior[f.node] = true;
        on_path[f.node] = false;
        stack.pop_back();
        if (!stack.empty()) stack.back().found = stack.back().found || found;
      }
    }
    on_path[root] = false;
    result.max_visits_per_root = std::max(result.max_visits_per_root, visits);
  }

  for (std::size_t i = 0; i < n; ++i)
    if (interior[i]) result.interior_nodes.insert(p.name(i));
  result.compelled = result.ancestors_in_cpdag;
  result.compelled.insert(result.interior_nodes.begin(), result.interior_nodes.end());
  return result;
}

NodeSet compelled_ancestors_by_paths(const Cpdag& cp, const NodeSet& targets) {
  const Pdag& p = cp.pdag();
  require_nodes(p, targets);
  const std::size_t n = p.size();
  const NodeSet a = ancestors(p, targets);
  std::vector<bool> in_a(n, false);
  for (const auto& v : a) in_a[p.index(v)] = true;
  std::vector<bool> interior(n, false);

  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  // Plain recursion: this route exists to be simple, and depth is bounded by |V|.
  auto extend = [&](auto& self) -> void {
    const std::size_t last = path.back();
    for (std::size_t z = 0; z < n; ++z) {
      if (!p.undirected(last, z) || on_path[z]) continue;
      if (path.size() >= 2 && p.adjacent(path[path.size() - 2], z)) continue;
      path.push_back(z);
      on_path[z] = true;
      if (in_a[z])
        for (std::size_t i = 1; i + 1 < path.size(); ++i) interior[path[i]] = true;
      self(self);
      on_path[z] = false;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_a[s]) continue;
    path = {s};
    on_path[s] = true;
    extend(extend);
    on_path[s] = false;
  }

  NodeSet out = a;
  for (std::size_t i = 0; i < n; ++i)
    if (interior[i]) out.insert(p.name(i));
  return out;
}

NodeSet compelled_ancestors_bruteforce(const Dag& g, const NodeSet& targets, std::size_t max_undirected) {
  require_nodes(g, targets);
  const auto members = enumerate_class(g, max_undirected);
  NodeSet out = g.node_set();
  for (const auto& m : members) {
    const NodeSet an = ancestors(m, targets);
    NodeSet kept;
    std::set_intersection(out.begin(), out.end(), an.begin(), an.end(), std::inserter(kept, kept.end()));
    out = std::move(kept);
  }
  return out;
}

Dag min_ancestor_dag(const Cpdag& p, const NodeSet& targets) {
  const NodeSet z = compelled_ancestors(p, targets).compelled;
  EdgeList pre;
  for (const auto& [a, b] : p.pdag().undirected_edges()) {
    if (z.count(a) && !z.count(b)) pre.emplace_back(a, b);
    if (z.count(b) && !z.count(a)) pre.emplace_back(b, a);
  }
  Dag dag;
  try {
    dag = consistent_extension(p.pdag(), pre);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoExtension) throw;
    fail(ErrorCode::kInternal, std::string("minimal-ancestor orientation has no extension: ") + e.what());
  }
  if (ancestors(dag, targets) != z) fail(ErrorCode::kInternal, "minimal-ancestor DAG has extra ancestors");
  return dag;
}

Dag merge_ancestral(const Dag& g1, const Dag& g2, const NodeSet& a2, const std::optional<NodeSet>& a1) {
  if (!same_class(g1, g2)) fail(ErrorCode::kPrecondition, "graphs are not Markov equivalent");
  require_nodes(g2, a2);
  if (!is_ancestral(g2, a2)) fail(ErrorCode::kPrecondition, "a2 is not ancestral in g2");
  if (a1 && !is_ancestral(g1, *a1)) fail(ErrorCode::kPrecondition, "a1 is not ancestral in g1");

  EdgeList edges;
  for (const auto& e : g1.directed_edges())
    if (a2.count(e.first) && a2.count(e.second)) edges.push_back(e);
  for (const auto& e : g2.directed_edges())
    if (!(a2.count(e.first) && a2.count(e.second))) edges.push_back(e);
  Dag merged(g2.nodes(), edges);

  if (!same_class(merged, g1) || !is_ancestral(merged, a2))
    fail(ErrorCode::kInternal, "merged graph left the class or lost ancestrality");
  if (a1) {
    NodeSet both;
    std::set_intersection(a1->begin(), a1->end(), a2.begin(), a2.end(), std::inserter(both, both.end()));
    if (!is_ancestral(merged, both)) fail(ErrorCode::kInternal, "merged graph does not keep a1 & a2 ancestral");
  }
  return merged;
}

}  // namespace selbn
