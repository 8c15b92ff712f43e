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

#include "selbn/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "selbn/error.hpp"

namespace selbn {
namespace {

using Bits = std::vector<bool>;

// Maximum cardinality search order; reversed, it is a perfect elimination
// order exactly when the graph is chordal.
std::vector<std::size_t> mcs_order(const Pdag& u) {
  const std::size_t n = u.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    numbered[best] = true;
    order.push_back(best);
    for (std::size_t w = 0; w < n; ++w)
      if (!numbered[w] && u.adjacent(best, w)) ++weight[w];
  }
  return order;
}

void bron_kerbosch(const Pdag& u, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<NodeSet>& out) {
  if (p.empty() && x.empty()) {
    NodeSet clique;
    for (auto v : r) clique.insert(u.name(v));
    out.push_back(std::move(clique));
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (auto c : *set) {
      std::size_t cnt = 0;
      for (auto v : p) cnt += u.adjacent(c, v) ? 1 : 0;
      if (cnt > best) {
        best = cnt;
        pivot = c;
      }
    }
  }
  std::vector<std::size_t> candidates;
  for (auto v : p)
    if (!u.adjacent(pivot, v)) candidates.push_back(v);
  for (auto v : candidates) {
    std::vector<std::size_t> np, nx;
    for (auto w : p)
      if (u.adjacent(v, w)) np.push_back(w);
    for (auto w : x)
      if (u.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(u, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

bool is_chordal(const Pdag& u) {
  const std::size_t n = u.size();
  auto order = mcs_order(u);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  // For each vertex, its earlier neighbours must form a clique; it suffices
  // to check them against the latest one of them.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = order[i];
    std::vector<std::size_t> earlier;
    for (std::size_t w = 0; w < n; ++w)
      if (u.adjacent(v, w) && pos[w] < i) earlier.push_back(w);
    if (earlier.size() < 2) continue;
    const std::size_t parent = *std::max_element(
        earlier.begin(), earlier.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    for (auto w : earlier)
      if (w != parent && !u.adjacent(parent, w)) return false;
  }
  return true;
}

std::vector<NodeSet> maximal_cliques(const Pdag& u) {
  std::vector<NodeSet> out;
  std::vector<std::size_t> r;
  std::vector<std::size_t> p(u.size());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(u, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> JoinTree::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(cliques.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool JoinTree::is_tree() const {
  if (cliques.empty()) return edges.empty();
  if (edges.size() + 1 != cliques.size()) return false;
  auto adj = adjacency();
  std::vector<bool> seen(cliques.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == cliques.size();
}

std::vector<std::size_t> JoinTree::path(std::size_t a, std::size_t b) const {
  auto adj = adjacency();
  std::vector<std::size_t> prev(cliques.size(), cliques.size());
  std::deque<std::size_t> queue{a};
  prev[a] = a;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v])
      if (prev[w] == cliques.size()) {
        prev[w] = v;
        queue.push_back(w);
      }
  }
  if (prev[b] == cliques.size()) return {};
  std::vector<std::size_t> out{b};
  while (out.back() != a) out.push_back(prev[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

bool JoinTree::has_running_intersection() const {
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      NodeSet shared;
      std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(), cliques[b].end(),
                            std::inserter(shared, shared.end()));
      if (shared.empty()) continue;
      for (auto m : path(a, b))
        if (!std::includes(cliques[m].begin(), cliques[m].end(), shared.begin(), shared.end())) return false;
    }
  }
  return true;
}

JoinTree join_tree(const Pdag& u) {
  if (!is_chordal(u)) fail(ErrorCode::kNotChordal, "graph is not chordal");
  JoinTree tree;
  tree.cliques = maximal_cliques(u);
  const std::size_t k = tree.cliques.size();
  // Kruskal on descending intersection size; zero-weight links join
  // disconnected components so the result is always a single tree.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> links;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t w = 0;
      for (const auto& v : tree.cliques[a]) w += tree.cliques[b].count(v);
      links.emplace_back(w, a, b);
    }
  std::stable_sort(links.begin(), links.end(),
                   [](const auto& l, const auto& r) { return std::get<0>(l) > std::get<0>(r); });
  std::vector<std::size_t> root(k);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [w, a, b] : links) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) continue;
    root[ra] = rb;
    tree.edges.emplace_back(a, b);
  }
  return tree;
}

Pdag unshielded_undirected_path_tree(const Pdag& p, const std::string& x) {
  const std::size_t n = p.size();
  const std::size_t start = p.index(x);
  std::vector<bool> on_tree(n, false);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  on_tree[start] = true;

  // Each frame is (node, predecessor); on_path keeps the walk simple.
  struct Frame {
    std::size_t node;
    std::size_t prev;
    std::size_t next = 0;
  };
  std::vector<bool> on_path(n, false);
  std::vector<Frame> stack{{start, n}};
  on_path[start] = true;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == n) {
      on_path[f.node] = false;
      stack.pop_back();
      continue;
    }
    const std::size_t z = f.next++;
    if (!p.undirected(f.node, z) || on_path[z]) continue;
    if (f.prev != n && (z == f.prev || p.adjacent(f.prev, z))) continue;
    on_tree[z] = true;
    edges.emplace(std::min(f.node, z), std::max(f.node, z));
    const std::size_t node = f.node;
    on_path[z] = true;
    stack.push_back({z, node});
  }

  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i)
    if (on_tree[i]) nodes.push_back(p.name(i));
  EdgeList undirected;
  for (auto [a, b] : edges) undirected.emplace_back(p.name(a), p.name(b));
  return Pdag(std::move(nodes), {}, undirected);
}

}  // namespace selbn
