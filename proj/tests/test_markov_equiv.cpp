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

#include <algorithm>

#include "selbn/chordal.hpp"
#include "selbn/error.hpp"
#include "selbn/markov_equiv.hpp"
#include "support.hpp"

namespace selbn {
namespace {

using testing::fixture;

std::set<EdgeList> as_edge_sets(const std::vector<Dag>& dags) {
  std::set<EdgeList> out;
  for (const auto& d : dags) {
    auto e = d.directed_edges();
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

TEST(MarkovEquiv, CpdagOfFig3aIsFig6a) {
  EXPECT_EQ(cpdag_of(fixture("fig3a").dag()).pdag(), fixture("fig6a").pdag());
  EXPECT_NO_THROW(Cpdag::from_pdag(fixture("fig6a").pdag()));
}

TEST(MarkovEquiv, SmallCpdags) {
  const Cpdag edge = cpdag_of(Dag({"A", "B"}, {{"A", "B"}}));
  EXPECT_EQ(edge.pdag(), Pdag({"A", "B"}, {}, {{"A", "B"}}));
  const Dag collider({"A", "B", "C"}, {{"A", "C"}, {"B", "C"}});
  EXPECT_EQ(cpdag_of(collider).pdag(), collider);
}

TEST(MarkovEquiv, FromPdagRejectsNonCpdag) {
  EXPECT_THROW(Cpdag::from_pdag(Pdag({"A", "B"}, {{"A", "B"}})), Error);
}

TEST(MarkovEquiv, SameClass) {
  EXPECT_TRUE(same_class(fixture("fig3a").dag(), fixture("fig6b").dag()));
  const Dag g = fixture("fig4").dag();
  EXPECT_TRUE(same_class(g, g));
  EXPECT_FALSE(same_class(Dag({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}}), Dag({"A", "B", "C"}, {{"A", "B"}, {"C", "B"}})));
}

TEST(MarkovEquiv, EnumerateFig6aClass) {
  const auto members = enumerate_class(Cpdag::from_pdag(fixture("fig6a").pdag()));
  EXPECT_EQ(members.size(), 4u);
  EXPECT_EQ(as_edge_sets(members), as_edge_sets(enumerate_class(fixture("fig3a").dag())));
  std::set<EdgeList> oracle;
  for (auto e : testing::class_by_orientation(fixture("fig3a").dag())) {
    std::sort(e.begin(), e.end());
    oracle.insert(e);
  }
  EXPECT_EQ(as_edge_sets(members), oracle);
}

TEST(MarkovEquiv, EnumerateTrivialClasses) {
  const Dag collider({"A", "B", "C"}, {{"A", "C"}, {"B", "C"}});
  EXPECT_EQ(enumerate_class(collider).size(), 1u);
  EXPECT_EQ(enumerate_class(Dag({"A", "B"}, {{"A", "B"}})).size(), 2u);
}

TEST(MarkovEquiv, EnumerationGuard) {
  std::vector<std::string> nodes;
  EdgeList edges;
  for (int i = 0; i < 8; ++i) nodes.push_back("V" + std::to_string(i));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) edges.emplace_back(nodes[i], nodes[j]);
  try {
    enumerate_class(Dag(nodes, edges), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
}

TEST(MarkovEquiv, EnumerationMatchesOrientationOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Dag g = testing::random_dag(rng, 2 + i % 5, i % 2 ? 0.3 : 0.5);
    std::set<EdgeList> oracle;
    for (auto e : testing::class_by_orientation(g)) {
      std::sort(e.begin(), e.end());
      oracle.insert(e);
    }
    const auto members = enumerate_class(g);
    ASSERT_EQ(as_edge_sets(members), oracle);
    for (const auto& m : members) EXPECT_TRUE(same_class(m, g));
  }
}

TEST(MarkovEquiv, CpdagPropertiesOnRandomDags) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const Dag g = testing::random_dag(rng, 3 + i % 5, 0.5);
    const Pdag p = cpdag_of(g).pdag();
    EXPECT_TRUE(testing::chordal_oracle(undirected_part(p)));
    EXPECT_EQ(testing::colliders_of(p), testing::colliders_of(g));
    EXPECT_EQ(testing::skeleton_pairs(p), testing::skeleton_pairs(g));
    // A directed CPDAG edge is shared by every member.
    for (const auto& m : testing::class_by_orientation(g))
      for (const auto& e : p.directed_edges()) EXPECT_NE(std::find(m.begin(), m.end(), e), m.end());
  }
}

TEST(MarkovEquiv, ConsistentExtensionFig6b) {
  const Pdag p = fixture("fig6a").pdag();
  const Dag d = consistent_extension(p, {{"O3", "O1"}, {"O3", "O2"}, {"O3", "O4"}});
  EXPECT_EQ(d, fixture("fig6b").dag());
}

TEST(MarkovEquiv, ConsistentExtensionOfDagIsItself) {
  const Dag g = fixture("fig4").dag();
  EXPECT_EQ(consistent_extension(g), g);
}

TEST(MarkovEquiv, ConsistentExtensionRejectsNewCollider) {
  const Pdag star({"O1", "O2", "O3", "O4"}, {}, {{"O1", "O3"}, {"O2", "O3"}, {"O3", "O4"}});
  try {
    consistent_extension(star, {{"O1", "O3"}, {"O2", "O3"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoExtension);
  }
  EXPECT_THROW(consistent_extension(star, {{"O1", "O2"}}), Error);
}

TEST(MarkovEquiv, ConsistentExtensionStaysInClass) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Dag g = testing::random_dag(rng, 3 + i % 5, 0.5);
    const Dag d = consistent_extension(cpdag_of(g).pdag());
    EXPECT_TRUE(testing::same_class_oracle(d, g));
  }
}

TEST(MarkovEquiv, TreeOrderOrientations) {
  const Pdag tri({"A", "B", "C"}, {}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  for (const auto& order : std::vector<std::vector<std::string>>{{"A", "B", "C"}, {"C", "A", "B"}, {"B", "C", "A"}}) {
    const Dag d = orient_by_total_order(tri, order);
    EXPECT_TRUE(testing::acyclic(d.nodes(), d.directed_edges()));
    EXPECT_TRUE(testing::colliders_of(d).empty());
  }
  const Pdag path({"A", "B", "C"}, {}, {{"A", "B"}, {"B", "C"}});
  EXPECT_EQ(orient_by_total_order(path, {"A", "B", "C"}), Dag({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}}));
}

TEST(MarkovEquiv, StarRootedAtO3O4) {
  const Pdag star({"O1", "O2", "O3", "O4"}, {}, {{"O1", "O3"}, {"O2", "O3"}, {"O3", "O4"}});
  const JoinTree jt = join_tree(star);
  const auto root = static_cast<std::size_t>(
      std::find(jt.cliques.begin(), jt.cliques.end(), NodeSet{"O3", "O4"}) - jt.cliques.begin());
  ASSERT_LT(root, jt.cliques.size());
  const TreeOrder order = tree_order(jt, root);
  EXPECT_EQ(order.rank[root], 0u);
  const NodeOrder less = induced_node_order(order);
  const Dag d = orient_by_total_order(star, less.linear_extension(star.nodes()));
  EXPECT_TRUE(d.has_directed("O3", "O1"));
  EXPECT_TRUE(d.has_directed("O3", "O2"));
  EXPECT_TRUE(testing::colliders_of(d).empty());
}

TEST(MarkovEquiv, TreeOrderNeverCreatesColliders) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const Pdag u = testing::random_chordal(rng, 3 + i % 6, 0.4);
    const JoinTree jt = join_tree(u);
    const TreeOrder order = tree_order(jt, i % jt.cliques.size());
    for (const auto& [a, b] : jt.edges) {
      const auto ra = static_cast<long>(order.rank[a]);
      const auto rb = static_cast<long>(order.rank[b]);
      EXPECT_EQ(std::abs(ra - rb), 1);
    }
    const Dag d = orient_by_total_order(u, induced_node_order(order).linear_extension(u.nodes()));
    EXPECT_TRUE(testing::acyclic(d.nodes(), d.directed_edges()));
    EXPECT_TRUE(testing::colliders_of(d).empty());
  }
}

}  // namespace
}  // namespace selbn
