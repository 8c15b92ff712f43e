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

#include "selbn/graph.hpp"

#include <algorithm>
#include <deque>

#include "selbn/error.hpp"

namespace selbn {
namespace {

Mark reverse(Mark m) {
  switch (m) {
    case Mark::kOut: return Mark::kIn;
    case Mark::kIn: return Mark::kOut;
    default: return m;
  }
}

}  // namespace

bool is_valid_node_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

Pdag::Pdag(std::vector<std::string> nodes, const EdgeList& directed, const EdgeList& undirected)
    : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!is_valid_node_name(nodes_[i])) fail(ErrorCode::kInvalidGraph, "invalid node name '" + nodes_[i] + "'");
    if (!index_.emplace(nodes_[i], i).second) fail(ErrorCode::kInvalidGraph, "duplicate node '" + nodes_[i] + "'");
  }
  const std::size_t n = nodes_.size();
  marks_.assign(n * n, Mark::kNone);
  auto add = [&](const NodeEdge& e, Mark m) {
    const std::size_t a = index(e.first);
    const std::size_t b = index(e.second);
    if (a == b) fail(ErrorCode::kInvalidGraph, "self-edge on '" + e.first + "'");
    if (marks_[a * n + b] != Mark::kNone)
      fail(ErrorCode::kInvalidGraph, "more than one edge between '" + e.first + "' and '" + e.second + "'");
    marks_[a * n + b] = m;
    marks_[b * n + a] = reverse(m);
  };
  for (const auto& e : directed) add(e, Mark::kOut);
  for (const auto& e : undirected) add(e, Mark::kUndirected);

  // Three-colour DFS over directed edges.
  std::vector<int> colour(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == n) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (marks_[v * n + w] != Mark::kOut) continue;
      if (colour[w] == 1) fail(ErrorCode::kInvalidGraph, "directed cycle through '" + nodes_[w] + "'");
      if (colour[w] == 0) {
        colour[w] = 1;
        stack.emplace_back(w, 0);
      }
    }
  }
}

bool Pdag::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

std::size_t Pdag::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorCode::kUnknownNode, "unknown node '" + std::string(name) + "'");
  return it->second;
}

bool Pdag::adjacent(std::string_view a, std::string_view b) const { return adjacent(index(a), index(b)); }
bool Pdag::has_directed(std::string_view from, std::string_view to) const {
  return directed(index(from), index(to));
}
bool Pdag::has_undirected(std::string_view a, std::string_view b) const {
  return undirected(index(a), index(b));
}

EdgeList Pdag::directed_edges() const {
  EdgeList out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (directed(i, j)) out.emplace_back(nodes_[i], nodes_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList Pdag::undirected_edges() const {
  EdgeList out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (undirected(i, j)) out.emplace_back(std::min(nodes_[i], nodes_[j]), std::max(nodes_[i], nodes_[j]));
  std::sort(out.begin(), out.end());
  return out;
}

bool Pdag::has_undirected_edges() const {
  return std::find(marks_.begin(), marks_.end(), Mark::kUndirected) != marks_.end();
}

namespace {

NodeSet collect(const Pdag& g, std::string_view node, Mark wanted, bool any) {
  const std::size_t i = g.index(node);
  NodeSet out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Mark m = g.mark(i, j);
    if (any ? m != Mark::kNone : m == wanted) out.insert(g.name(j));
  }
  return out;
}

}  // namespace

NodeSet Pdag::parents(std::string_view node) const { return collect(*this, node, Mark::kIn, false); }
NodeSet Pdag::children(std::string_view node) const { return collect(*this, node, Mark::kOut, false); }
NodeSet Pdag::neighbors(std::string_view node) const { return collect(*this, node, Mark::kUndirected, false); }
NodeSet Pdag::adjacents(std::string_view node) const { return collect(*this, node, Mark::kNone, true); }

std::vector<std::size_t> Pdag::parent_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (mark(i, j) == Mark::kIn) out.push_back(j);
  return out;
}

std::vector<std::size_t> Pdag::adjacent_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

bool operator==(const Pdag& a, const Pdag& b) {
  return a.node_set() == b.node_set() && a.directed_edges() == b.directed_edges() &&
         a.undirected_edges() == b.undirected_edges();
}

Dag::Dag(std::vector<std::string> nodes, const EdgeList& edges) : Pdag(std::move(nodes), edges, {}) {}

Dag Dag::from_pdag(const Pdag& p) {
  if (p.has_undirected_edges()) fail(ErrorCode::kInvalidGraph, "graph has undirected edges where a DAG is required");
  Dag d;
  static_cast<Pdag&>(d) = p;
  return d;
}

std::vector<std::size_t> Dag::topological_order() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = parent_indices(i).size();
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || indegree[i] != 0) continue;
      done[i] = true;
      order.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (directed(i, j)) --indegree[j];
      break;
    }
  }
  return order;
}

ConditionalDag::ConditionalDag(Dag graph, NodeSet fixed) : graph_(std::move(graph)), fixed_(std::move(fixed)) {
  require_nodes(graph_, fixed_);
  for (const auto& f : fixed_)
    if (!graph_.parents(f).empty()) fail(ErrorCode::kInvalidGraph, "fixed node '" + f + "' has parents");
}

NodeSet ConditionalDag::random_nodes() const {
  NodeSet out;
  for (const auto& v : graph_.nodes())
    if (!fixed_.count(v)) out.insert(v);
  return out;
}

std::vector<std::string> ConditionalDag::random_in_order() const {
  std::vector<std::string> out;
  for (const auto& v : graph_.nodes())
    if (!fixed_.count(v)) out.push_back(v);
  return out;
}

void require_nodes(const Pdag& g, const NodeSet& names) {
  for (const auto& v : names)
    if (!g.contains(v)) fail(ErrorCode::kUnknownNode, "unknown node '" + v + "'");
}

namespace {

NodeSet closure(const Pdag& g, const NodeSet& start, Mark follow) {
  require_nodes(g, start);
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue;
  for (const auto& v : start) {
    seen[g.index(v)] = true;
    queue.push_back(g.index(v));
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < g.size(); ++w) {
      if (!seen[w] && g.mark(v, w) == follow) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  NodeSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (seen[i]) out.insert(g.name(i));
  return out;
}

}  // namespace

NodeSet ancestors(const Pdag& g, const NodeSet& targets) { return closure(g, targets, Mark::kIn); }
NodeSet descendants(const Pdag& g, const NodeSet& sources) { return closure(g, sources, Mark::kOut); }

bool is_ancestral(const Pdag& g, const NodeSet& a) { return ancestors(g, a) == a; }

Pdag induced_subgraph(const Pdag& g, const NodeSet& keep) {
  require_nodes(g, keep);
  std::vector<std::string> nodes;
  for (const auto& v : g.nodes())
    if (keep.count(v)) nodes.push_back(v);
  EdgeList directed, undirected;
  for (const auto& e : g.directed_edges())
    if (keep.count(e.first) && keep.count(e.second)) directed.push_back(e);
  for (const auto& e : g.undirected_edges())
    if (keep.count(e.first) && keep.count(e.second)) undirected.push_back(e);
  return Pdag(std::move(nodes), directed, undirected);
}

Dag induced_subgraph(const Dag& g, const NodeSet& keep) {
  return Dag::from_pdag(induced_subgraph(static_cast<const Pdag&>(g), keep));
}

ConditionalDag fix(const Dag& g, const NodeSet& a) {
  require_nodes(g, a);
  EdgeList kept;
  for (const auto& e : g.directed_edges())
    if (!a.count(e.second)) kept.push_back(e);
  return ConditionalDag(Dag(g.nodes(), kept), a);
}

Pdag skeleton(const Pdag& g) {
  EdgeList undirected = g.undirected_edges();
  for (const auto& [a, b] : g.directed_edges()) undirected.emplace_back(std::min(a, b), std::max(a, b));
  return Pdag(g.nodes(), {}, undirected);
}

Pdag undirected_part(const Pdag& g) { return Pdag(g.nodes(), {}, g.undirected_edges()); }

Dag directed_part(const Pdag& g) { return Dag(g.nodes(), g.directed_edges()); }

std::set<Triple> unshielded_colliders(const Pdag& g) {
  std::set<Triple> out;
  const std::size_t n = g.size();
  for (std::size_t z = 0; z < n; ++z) {
    const auto pa = g.parent_indices(z);
    for (std::size_t a = 0; a < pa.size(); ++a) {
      for (std::size_t b = a + 1; b < pa.size(); ++b) {
        if (g.adjacent(pa[a], pa[b])) continue;
        const auto& x = g.name(pa[a]);
        const auto& y = g.name(pa[b]);
        out.insert(Triple{std::min(x, y), g.name(z), std::max(x, y)});
      }
    }
  }
  return out;
}

}  // namespace selbn
