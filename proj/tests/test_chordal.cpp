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

#include <gtest/gtest.h>

#include "selbn/chordal.hpp"
#include "selbn/error.hpp"
#include "selbn/markov_equiv.hpp"
#include "support.hpp"

namespace selbn {
namespace {

Pdag undirected(std::vector<std::string> nodes, const EdgeList& edges) { return Pdag(std::move(nodes), {}, edges); }

TEST(Chordal, FourCycleIsNotChordal) {
  const Pdag c4 = undirected({"O1", "O2", "O3", "O4"}, {{"O1", "O2"}, {"O2", "O3"}, {"O3", "O4"}, {"O4", "O1"}});
  EXPECT_FALSE(is_chordal(c4));
  try {
    join_tree(c4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotChordal);
  }
}

TEST(Chordal, Triangle) {
  const Pdag t = undirected({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  EXPECT_TRUE(is_chordal(t));
  EXPECT_EQ(maximal_cliques(t), (std::vector<NodeSet>{{"A", "B", "C"}}));
  const JoinTree jt = join_tree(t);
  EXPECT_EQ(jt.cliques.size(), 1u);
  EXPECT_TRUE(jt.edges.empty());
  EXPECT_TRUE(jt.is_tree());
}

TEST(Chordal, StarOfFig6a) {
  const Pdag star = undirected_part(testing::fixture("fig6a").pdag());
  EXPECT_TRUE(is_chordal(star));
  const auto cliques = maximal_cliques(induced_subgraph(star, {"O1", "O2", "O3", "O4"}));
  EXPECT_EQ(cliques, (std::vector<NodeSet>{{"O1", "O3"}, {"O2", "O3"}, {"O3", "O4"}}));
  const JoinTree jt = join_tree(induced_subgraph(star, {"O1", "O2", "O3", "O4"}));
  EXPECT_TRUE(jt.is_tree());
  EXPECT_TRUE(jt.has_running_intersection());
  // Any spanning tree over the three cliques runs through O3.
  for (int drop = 0; drop < 3; ++drop) {
    JoinTree alt{cliques, {}};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        if (static_cast<int>(a + b - 1) != drop) alt.edges.emplace_back(a, b);
    EXPECT_TRUE(alt.is_tree());
    EXPECT_TRUE(alt.has_running_intersection());
  }
}

TEST(Chordal, RunningIntersectionDetectsBrokenTree) {
  JoinTree jt{{{"A", "B"}, {"C", "D"}, {"B", "E"}}, {{0, 1}, {1, 2}}};
  EXPECT_TRUE(jt.is_tree());
  EXPECT_FALSE(jt.has_running_intersection());
}

TEST(Chordal, AgreesWithEliminationOracle) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + i % 6;
    EdgeList edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back("V" + std::to_string(a), "V" + std::to_string(b));
    std::vector<std::string> nodes;
    for (int a = 0; a < n; ++a) nodes.push_back("V" + std::to_string(a));
    const Pdag u = undirected(nodes, edges);
    ASSERT_EQ(is_chordal(u), testing::chordal_oracle(u));
    if (!is_chordal(u)) continue;
    const JoinTree jt = join_tree(u);
    EXPECT_TRUE(jt.is_tree());
    EXPECT_TRUE(jt.has_running_intersection());
    for (std::size_t a = 0; a < jt.cliques.size(); ++a)
      for (std::size_t b = 0; b < jt.cliques.size(); ++b)
        if (a != b) {
          EXPECT_FALSE(std::includes(jt.cliques[b].begin(), jt.cliques[b].end(), jt.cliques[a].begin(),
                                     jt.cliques[a].end()));
        }
    for (const auto& [x, y] : u.undirected_edges()) {
      bool covered = false;
      for (const auto& c : jt.cliques) covered = covered || (c.count(x) && c.count(y));
      EXPECT_TRUE(covered);
    }
  }
}

TEST(Chordal, UnshieldedPathTreeFig6a) {
  const Pdag p = testing::fixture("fig6a").pdag();
  const Pdag t = unshielded_undirected_path_tree(p, "O1");
  EXPECT_EQ(t.node_set(), (NodeSet{"O1", "O2", "O3", "O4"}));
  EXPECT_EQ(t.undirected_edges(), (EdgeList{{"O1", "O3"}, {"O2", "O3"}, {"O3", "O4"}}));
}

TEST(Chordal, UnshieldedPathTreeTrivialCases) {
  const Pdag iso({"A", "B"}, {}, {});
  EXPECT_EQ(unshielded_undirected_path_tree(iso, "A").node_set(), (NodeSet{"A"}));
  const Pdag chain({"A", "B", "C"}, {}, {{"A", "B"}, {"B", "C"}});
  EXPECT_EQ(unshielded_undirected_path_tree(chain, "A").undirected_edges(), (EdgeList{{"A", "B"}, {"B", "C"}}));
  const Pdag tri({"A", "B", "C"}, {}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  EXPECT_EQ(unshielded_undirected_path_tree(tri, "A").undirected_edges(), (EdgeList{{"A", "B"}, {"A", "C"}}));
}

TEST(Chordal, UnshieldedPathTreeMatchesPathEnumeration) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const Cpdag cp = cpdag_of(testing::random_dag(rng, 3 + i % 5, 0.6));
    for (const auto& x : cp.pdag().nodes()) {
      const Pdag t = unshielded_undirected_path_tree(cp.pdag(), x);
      const auto cover = testing::unshielded_paths_from(cp.pdag(), x);
      EXPECT_EQ(t.node_set(), cover.nodes);
      const auto edges = t.undirected_edges();
      EXPECT_EQ(std::set<NodeEdge>(edges.begin(), edges.end()), cover.edges);
      EXPECT_GE(edges.size() + 1, t.size());
    }
  }
}

TEST(Chordal, UnshieldedPathSubgraphOfDiamondHasACycle) {
  const Pdag diamond({"x", "a", "b", "c"}, {}, {{"x", "a"}, {"x", "b"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
  ASSERT_TRUE(testing::chordal_oracle(diamond));
  const Pdag t = unshielded_undirected_path_tree(diamond, "x");
  EXPECT_EQ(t.undirected_edges(), (EdgeList{{"a", "c"}, {"a", "x"}, {"b", "c"}, {"b", "x"}}));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(testing::simple_cycles(t).size(), 1u);
}

}  // namespace
}  // namespace selbn
