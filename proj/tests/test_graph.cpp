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

#include "selbn/error.hpp"
#include "selbn/graph.hpp"
#include "support.hpp"

namespace selbn {
namespace {

using testing::fixture;

TEST(Graph, AncestorsOfSelectionInFig3a) {
  const Dag g = fixture("fig3a").dag();
  EXPECT_EQ(ancestors(g, {"S"}), (NodeSet{"O1", "O2", "O3", "O4", "S"}));
}

TEST(Graph, AncestorsAreReflexive) {
  const Dag g({"A", "B", "X"}, {{"A", "B"}});
  EXPECT_EQ(ancestors(g, {"X"}), (NodeSet{"X"}));
  EXPECT_EQ(descendants(g, {"A"}), (NodeSet{"A", "B"}));
}

TEST(Graph, AncestorsInCpdagFollowDirectedEdgesOnly) {
  const Pdag p = fixture("fig6a").pdag();
  EXPECT_EQ(ancestors(p, {"S"}), (NodeSet{"O1", "O2", "S"}));
}

TEST(Graph, FixAncestralPartOfFig3a) {
  const Dag g = fixture("fig3a").dag();
  const Dag o = induced_subgraph(g, {"O1", "O2", "O3", "O4", "O5", "O6"});
  const ConditionalDag c = fix(o, {"O1", "O2", "O3", "O4"});
  EXPECT_EQ(c.random_nodes(), (NodeSet{"O5", "O6"}));
  EXPECT_EQ(c.fixed_nodes(), (NodeSet{"O1", "O2", "O3", "O4"}));
  EXPECT_EQ(c.graph(), Dag(o.nodes(), {{"O4", "O5"}, {"O6", "O5"}}));
}

TEST(Graph, FixNothingAndEverything) {
  const Dag g = fixture("fig4").dag();
  const ConditionalDag none = fix(g, {});
  EXPECT_EQ(none.graph(), g);
  EXPECT_EQ(none.random_nodes(), g.node_set());
  const ConditionalDag all = fix(g, g.node_set());
  EXPECT_TRUE(all.random_nodes().empty());
  EXPECT_TRUE(all.graph().directed_edges().empty());
}

TEST(Graph, InducedSubgraphOfFig3a) {
  const Dag g = fixture("fig3a").dag();
  const Dag b = induced_subgraph(g, {"O1", "O2", "O3", "O4", "S"});
  EXPECT_EQ(b, Dag({"O1", "O2", "O3", "O4", "S"}, {{"O3", "O1"}, {"O3", "O2"}, {"O4", "O3"}, {"O1", "S"}, {"O2", "S"}}));
  EXPECT_EQ(induced_subgraph(g, g.node_set()), g);
  EXPECT_EQ(induced_subgraph(g, {}).size(), 0u);
}

TEST(Graph, UnshieldedColliders) {
  EXPECT_EQ(unshielded_colliders(fixture("fig2").dag()), (std::set<Triple>{{"O2", "S", "O3"}}));
  EXPECT_EQ(unshielded_colliders(fixture("fig4").dag()), (std::set<Triple>{{"O1", "O4", "O3"}}));
  EXPECT_TRUE(unshielded_colliders(Dag({"A", "B", "C"}, {})).empty());
}

TEST(Graph, CollidersAgreeWithOracleOnRandomDags) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Dag g = testing::random_dag(rng, 2 + i % 6, 0.5);
    EXPECT_EQ(unshielded_colliders(g), testing::colliders_of(g));
  }
}

TEST(Graph, AncestorsAgreeWithOracleOnRandomDags) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Dag g = testing::random_dag(rng, 2 + i % 7, 0.4);
    const NodeSet t = testing::random_targets(rng, g, 2);
    EXPECT_EQ(ancestors(g, t), testing::ancestors_oracle(g.nodes(), g.directed_edges(), t));
  }
}

TEST(Graph, RejectsCyclesAndBadEdges) {
  EXPECT_THROW(Dag({"A", "B"}, {{"A", "B"}, {"B", "A"}}), Error);
  EXPECT_THROW(Dag({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}}), Error);
  EXPECT_THROW(Dag({"A"}, {{"A", "A"}}), Error);
  try {
    Dag({"A"}, {{"A", "Z"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
  EXPECT_THROW(Pdag({"A", "B"}, {{"A", "B"}}, {{"A", "B"}}), Error);
  EXPECT_THROW(Dag::from_pdag(Pdag({"A", "B"}, {}, {{"A", "B"}})), Error);
}

TEST(Graph, FixedNodesMustBeSources) {
  const Dag g({"A", "B"}, {{"A", "B"}});
  EXPECT_NO_THROW(ConditionalDag(g, {"A"}));
  EXPECT_THROW(ConditionalDag(g, {"B"}), Error);
}

TEST(Graph, FixAndInducedStayAcyclic) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Dag g = testing::random_dag(rng, 6, 0.5);
    const NodeSet a = testing::random_targets(rng, g, 3);
    const ConditionalDag c = fix(g, a);
    EXPECT_TRUE(testing::acyclic(c.graph().nodes(), c.graph().directed_edges()));
    for (const auto& f : c.fixed_nodes()) EXPECT_TRUE(c.graph().parents(f).empty());
    const Dag h = induced_subgraph(g, a);
    EXPECT_TRUE(testing::acyclic(h.nodes(), h.directed_edges()));
  }
}

TEST(Graph, NodeNames) {
  EXPECT_TRUE(is_valid_node_name("O1"));
  EXPECT_TRUE(is_valid_node_name("x_2"));
  EXPECT_FALSE(is_valid_node_name(""));
  EXPECT_FALSE(is_valid_node_name("a b"));
  EXPECT_FALSE(is_valid_node_name("a->b"));
}

}  // namespace
}  // namespace selbn
