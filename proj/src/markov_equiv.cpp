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

#include "selbn/markov_equiv.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "selbn/error.hpp"

namespace selbn {
namespace {

// Mutable edge marks used while orienting; the public types stay immutable.
class Orientation {
 public:
  explicit Orientation(const Pdag& g) : names_(g.nodes()), n_(g.size()), marks_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) marks_[i * n_ + j] = g.mark(i, j);
  }

  std::size_t size() const { return n_; }
  Mark mark(std::size_t i, std::size_t j) const { return marks_[i * n_ + j]; }
  bool adj(std::size_t i, std::size_t j) const { return mark(i, j) != Mark::kNone; }
  bool out(std::size_t i, std::size_t j) const { return mark(i, j) == Mark::kOut; }
  bool und(std::size_t i, std::size_t j) const { return mark(i, j) == Mark::kUndirected; }

  void orient(std::size_t from, std::size_t to) {
    marks_[from * n_ + to] = Mark::kOut;
    marks_[to * n_ + from] = Mark::kIn;
  }

  Pdag to_pdag() const {
    EdgeList directed, undirected;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (out(i, j)) directed.emplace_back(names_[i], names_[j]);
        if (i < j && und(i, j)) undirected.emplace_back(names_[i], names_[j]);
      }
    return Pdag(names_, directed, undirected);
  }

  // Whether one of Meek's rules forces a -> b for the undirected a - b.
  bool forced(std::size_t a, std::size_t b) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == a || c == b) continue;
      if (out(c, a) && !adj(c, b)) return true;  // R1
      if (out(a, c) && out(c, b)) return true;   // R2
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == a || c == b) continue;
      for (std::size_t d = 0; d < n_; ++d) {
        if (d == a || d == b || d == c) continue;
        // R3: a - c, a - d, c -> b <- d, c and d nonadjacent.
        if (c < d && und(a, c) && und(a, d) && out(c, b) && out(d, b) && !adj(c, d)) return true;
        // R4: a - d, d -> c -> b, a adjacent to c, b and d nonadjacent.
        if (und(a, d) && out(d, c) && out(c, b) && adj(a, c) && !adj(b, d)) return true;
      }
    }
    return false;
  }

  void close_under_meek_rules() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          if (und(a, b) && forced(a, b)) {
            orient(a, b);
            changed = true;
          }
    }
  }

 private:
  std::vector<std::string> names_;
  std::size_t n_;
  std::vector<Mark> marks_;
};

bool acyclic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

std::vector<std::size_t> lexicographic_indices(const Pdag& g) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.name(a) < g.name(b); });
  return order;
}

}  // namespace

Cpdag cpdag_of(const Dag& g) {
  Orientation o(skeleton(g));
  for (const auto& t : unshielded_colliders(g)) {
    o.orient(g.index(t[0]), g.index(t[1]));
    o.orient(g.index(t[2]), g.index(t[1]));
  }
  o.close_under_meek_rules();
  return Cpdag(o.to_pdag());
}

Cpdag Cpdag::from_pdag(const Pdag& p) {
  Dag member;
  try {
    member = consistent_extension(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoExtension) throw;
    fail(ErrorCode::kInvalidGraph, "not a CPDAG: no DAG extends it");
  }
  if (!(cpdag_of(member).pdag() == p)) fail(ErrorCode::kInvalidGraph, "not a CPDAG: orientations are not complete");
  return Cpdag(p);
}

bool same_class(const Dag& a, const Dag& b) {
  if (a.node_set() != b.node_set()) fail(ErrorCode::kPrecondition, "graphs have different node sets");
  return skeleton(a) == skeleton(b) && unshielded_colliders(a) == unshielded_colliders(b);
}

std::vector<Dag> enumerate_class(const Cpdag& cp, std::size_t max_undirected) {
  const Pdag& p = cp.pdag();
  const auto undirected = p.undirected_edges();
  if (undirected.size() > max_undirected)
    fail(ErrorCode::kGuardExceeded, "class enumeration guard exceeded: " + std::to_string(undirected.size()) +
                                        " undirected edges > " + std::to_string(max_undirected));
  const auto directed = p.directed_edges();
  const auto colliders = unshielded_colliders(p);

  std::vector<std::pair<std::size_t, std::size_t>> base;
  for (const auto& [a, b] : directed) base.emplace_back(p.index(a), p.index(b));

  std::vector<Dag> members;
  const std::size_t k = undirected.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    auto edges = base;
    EdgeList named = directed;
    for (std::size_t e = 0; e < k; ++e) {
      auto [a, b] = undirected[e];
      if (mask & (std::size_t{1} << e)) std::swap(a, b);
      edges.emplace_back(p.index(a), p.index(b));
      named.emplace_back(a, b);
    }
    if (!acyclic(p.size(), edges)) continue;
    Dag candidate(p.nodes(), named);
    if (unshielded_colliders(candidate) == colliders) members.push_back(std::move(candidate));
  }
  return members;
}

std::vector<Dag> enumerate_class(const Dag& g, std::size_t max_undirected) {
  return enumerate_class(cpdag_of(g), max_undirected);
}

Dag consistent_extension(const Pdag& p, const EdgeList& pre_oriented) {
  EdgeList directed = p.directed_edges();
  std::set<NodeEdge> oriented_pairs;
  for (const auto& [a, b] : pre_oriented) {
    if (!p.contains(a) || !p.contains(b)) fail(ErrorCode::kUnknownNode, "unknown node in pre-oriented edge");
    if (!p.has_undirected(a, b))
      fail(ErrorCode::kPrecondition, "pre-oriented edge " + a + " -> " + b + " is not an undirected edge");
    oriented_pairs.emplace(std::min(a, b), std::max(a, b));
    directed.emplace_back(a, b);
  }
  EdgeList undirected;
  for (const auto& e : p.undirected_edges())
    if (!oriented_pairs.count(e)) undirected.push_back(e);

  Pdag start;
  try {
    start = Pdag(p.nodes(), directed, undirected);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidGraph) throw;
    fail(ErrorCode::kNoExtension, std::string("pre-orientation is inconsistent: ") + e.what());
  }
  const auto colliders = unshielded_colliders(p);
  if (unshielded_colliders(start) != colliders)
    fail(ErrorCode::kNoExtension, "pre-orientation creates a new unshielded collider");

  Orientation work(start);
  Orientation result(start);
  const std::size_t n = start.size();
  std::vector<bool> alive(n, true);
  const auto order = lexicographic_indices(start);
  for (std::size_t removed = 0; removed < n; ++removed) {
    std::size_t chosen = n;
    for (auto x : order) {
      if (!alive[x]) continue;
      bool ok = true;
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!alive[y]) continue;
        if (work.out(x, y)) ok = false;
        if (!ok || !work.und(x, y)) continue;
        for (std::size_t z = 0; z < n && ok; ++z)
          if (alive[z] && z != y && work.adj(x, z) && !work.adj(y, z)) ok = false;
      }
      if (ok) {
        chosen = x;
        break;
      }
    }
    if (chosen == n) fail(ErrorCode::kNoExtension, "no consistent extension exists");
    for (std::size_t y = 0; y < n; ++y)
      if (alive[y] && work.und(chosen, y)) result.orient(y, chosen);
    alive[chosen] = false;
  }

  Dag dag = Dag::from_pdag(result.to_pdag());
  if (!(skeleton(dag) == skeleton(p)) || unshielded_colliders(dag) != colliders)
    fail(ErrorCode::kInternal, "extension failed re-verification");
  return dag;
}

TreeOrder tree_order(JoinTree jt, std::size_t root) {
  if (!jt.is_tree()) fail(ErrorCode::kInvalidArgument, "join tree is not a tree");
  if (root >= jt.cliques.size()) fail(ErrorCode::kInvalidArgument, "root clique out of range");
  TreeOrder t;
  const std::size_t k = jt.cliques.size();
  t.root = root;
  t.rank.assign(k, k);
  t.parent.assign(k, k);
  auto adj = jt.adjacency();
  std::deque<std::size_t> queue{root};
  t.rank[root] = 0;
  t.parent[root] = root;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v])
      if (t.rank[w] == k) {
        t.rank[w] = t.rank[v] + 1;
        t.parent[w] = v;
        queue.push_back(w);
      }
  }
  t.join_tree = std::move(jt);
  return t;
}

NodeOrder induced_node_order(const TreeOrder& order) {
  const auto& cliques = order.join_tree.cliques;
  NodeSet all;
  for (const auto& c : cliques) all.insert(c.begin(), c.end());
  std::vector<std::string> names(all.begin(), all.end());
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));

  for (std::size_t m2 = 0; m2 < cliques.size(); ++m2) {
    for (std::size_t m1 = m2; m1 != order.root;) {
      m1 = order.parent[m1];
      for (const auto& x : cliques[m1]) {
        if (!cliques[m2].count(x)) continue;
        for (const auto& y : cliques[m2])
          if (!cliques[m1].count(y)) less[idx[x]][idx[y]] = true;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less[k][j]) less[i][j] = true;

  NodeOrder out;
  for (std::size_t i = 0; i < n; ++i) {
    if (less[i][i]) fail(ErrorCode::kInternal, "induced node order is cyclic");
    for (std::size_t j = 0; j < n; ++j)
      if (less[i][j]) out.less.emplace(names[i], names[j]);
  }
  return out;
}

std::vector<std::string> NodeOrder::linear_extension(const std::vector<std::string>& nodes) const {
  std::map<std::string, std::size_t> indegree;
  for (const auto& v : nodes) indegree[v] = 0;
  for (const auto& [a, b] : less)
    if (indegree.count(a) && indegree.count(b)) ++indegree[b];
  std::set<std::string> ready;
  for (const auto& [v, d] : indegree)
    if (d == 0) ready.insert(v);
  std::vector<std::string> out;
  while (!ready.empty()) {
    auto v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(v);
    for (auto it = less.lower_bound({v, std::string()}); it != less.end() && it->first == v; ++it)
      if (indegree.count(it->second) && --indegree[it->second] == 0) ready.insert(it->second);
  }
  if (out.size() != indegree.size()) fail(ErrorCode::kInternal, "order has a cycle");
  return out;
}

Dag orient_by_total_order(const Pdag& u, const std::vector<std::string>& total) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < total.size(); ++i) pos[total[i]] = i;
  if (pos.size() != total.size() || NodeSet(total.begin(), total.end()) != u.node_set())
    fail(ErrorCode::kInvalidArgument, "total order must list every node exactly once");
  EdgeList edges;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u.adjacent(i, j) && pos[u.name(i)] < pos[u.name(j)]) edges.emplace_back(u.name(i), u.name(j));
  return Dag(u.nodes(), edges);
}

}  // namespace selbn
