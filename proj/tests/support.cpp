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

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "selbn/fixtures.hpp"

namespace selbn::testing {

namespace {

NodeEdge ordered(const std::string& a, const std::string& b) { return a < b ? NodeEdge{a, b} : NodeEdge{b, a}; }

std::map<std::string, NodeSet> adjacency(const Pdag& g) {
  std::map<std::string, NodeSet> adj;
  for (const auto& n : g.nodes()) adj[n];
  for (const auto& [a, b] : skeleton_pairs(g)) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("V" + std::to_string(i));
  return out;
}

}  // namespace

GraphFile fixture(const std::string& name) { return parse_graph(fixture_text(name)); }

Dag random_dag(std::mt19937_64& rng, int n, double p) {
  const auto nodes = names(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(nodes[perm[i]], nodes[perm[j]]);
  return Dag(nodes, edges);
}

Pdag random_chordal(std::mt19937_64& rng, int n, double p) {
  const auto nodes = names(n);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) adj[i][j] = adj[j][i] = true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> gone(n, false);
  for (int v : order) {
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) adj[nb[a]][nb[b]] = adj[nb[b]][nb[a]] = true;
    gone[v] = true;
  }
  EdgeList und;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) und.emplace_back(nodes[i], nodes[j]);
  return Pdag(nodes, {}, und);
}

NodeSet random_targets(std::mt19937_64& rng, const Pdag& g, std::size_t max_size) {
  std::vector<std::string> pool = g.nodes();
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t k = 1 + std::uniform_int_distribution<std::size_t>(0, std::min(max_size, pool.size()) - 1)(rng);
  return NodeSet(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
}

std::set<NodeEdge> skeleton_pairs(const Pdag& g) {
  std::set<NodeEdge> out;
  for (const auto& [a, b] : g.directed_edges()) out.insert(ordered(a, b));
  for (const auto& [a, b] : g.undirected_edges()) out.insert(ordered(a, b));
  return out;
}

std::set<Triple> colliders_of(const Pdag& g) {
  const auto pairs = skeleton_pairs(g);
  std::map<std::string, NodeSet> parents;
  for (const auto& [a, b] : g.directed_edges()) parents[b].insert(a);
  std::set<Triple> out;
  for (const auto& [z, pa] : parents)
    for (const auto& x : pa)
      for (const auto& y : pa)
        if (x < y && !pairs.count(ordered(x, y))) out.insert(Triple{x, z, y});
  return out;
}

bool acyclic(const std::vector<std::string>& nodes, const EdgeList& edges) {
  std::map<std::string, int> indeg;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& n : nodes) indeg[n] = 0;
  for (const auto& [a, b] : edges) {
    ++indeg[b];
    out[a].push_back(b);
  }
  std::vector<std::string> ready;
  for (const auto& [n, d] : indeg)
    if (d == 0) ready.push_back(n);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::string n = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& c : out[n])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  return seen == nodes.size();
}

std::vector<EdgeList> class_by_orientation(const Dag& g) {
  const auto pair_set = skeleton_pairs(g);
  const std::vector<NodeEdge> pairs(pair_set.begin(), pair_set.end());
  const auto target = colliders_of(g);
  std::vector<EdgeList> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    EdgeList edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      edges.push_back(mask >> i & 1 ? NodeEdge{pairs[i].second, pairs[i].first} : pairs[i]);
    if (!acyclic(g.nodes(), edges)) continue;
    if (colliders_of(Dag(g.nodes(), edges)) == target) out.push_back(edges);
  }
  return out;
}

bool same_class_oracle(const Pdag& a, const Pdag& b) {
  return a.node_set() == b.node_set() && skeleton_pairs(a) == skeleton_pairs(b) && colliders_of(a) == colliders_of(b);
}

NodeSet ancestors_oracle(const std::vector<std::string>& nodes, const EdgeList& edges, const NodeSet& targets) {
  (void)nodes;
  NodeSet out = targets;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [a, b] : edges)
      if (out.count(b) && out.insert(a).second) grew = true;
  }
  return out;
}

NodeSet compelled_oracle(const Dag& g, const NodeSet& targets) {
  std::optional<NodeSet> acc;
  for (const auto& member : class_by_orientation(g)) {
    const NodeSet an = ancestors_oracle(g.nodes(), member, targets);
    if (!acc) {
      acc = an;
      continue;
    }
    NodeSet keep;
    std::set_intersection(acc->begin(), acc->end(), an.begin(), an.end(), std::inserter(keep, keep.end()));
    acc = keep;
  }
  return acc.value_or(NodeSet{});
}

bool chordal_oracle(const Pdag& u) {
  auto adj = adjacency(u);
  while (!adj.empty()) {
    auto simplicial = std::find_if(adj.begin(), adj.end(), [&](const auto& entry) {
      for (const auto& a : entry.second)
        for (const auto& b : entry.second)
          if (a < b && !adj.at(a).count(b)) return false;
      return true;
    });
    if (simplicial == adj.end()) return false;
    const std::string v = simplicial->first;
    for (const auto& n : simplicial->second) adj[n].erase(v);
    adj.erase(v);
  }
  return true;
}

std::vector<std::vector<std::string>> simple_cycles(const Pdag& u) {
  const auto adj = adjacency(u);
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> path;
  NodeSet on_path;
  // Cycles are rooted at their smallest node and kept in one direction.
  std::function<void(const std::string&, const std::string&)> walk = [&](const std::string& root,
                                                                         const std::string& v) {
    for (const auto& w : adj.at(v)) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= root || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      walk(root, w);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (const auto& [root, nb] : adj) {
    path = {root};
    on_path = {root};
    walk(root, root);
  }
  return out;
}

std::size_t shielded_triples(const Pdag& u, const std::vector<std::string>& cycle) {
  const std::size_t k = cycle.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (u.adjacent(cycle[(i + k - 1) % k], cycle[(i + 1) % k])) ++count;
  return count;
}

PathCover unshielded_paths_from(const Pdag& p, const std::string& x) {
  PathCover cover;
  cover.nodes.insert(x);
  std::vector<std::string> path{x};
  std::function<void()> walk = [&] {
    const std::string v = path.back();
    for (const auto& w : p.neighbors(v)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (path.size() >= 2 && p.adjacent(path[path.size() - 2], w)) continue;
      cover.nodes.insert(w);
      cover.edges.insert(ordered(v, w));
      path.push_back(w);
      walk();
      path.pop_back();
    }
  };
  walk();
  return cover;
}

}  // namespace selbn::testing
