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
#include "selbn/verify.hpp"
#include "support.hpp"

namespace selbn {
namespace {

SelectionProblem problem(const std::string& name) { return testing::fixture(name).selection_problem(); }

TEST(Verify, LawNames) {
  for (Law law : all_laws()) EXPECT_EQ(parse_law(law_name(law)), law);
  EXPECT_FALSE(parse_law("lemma9").has_value());
  EXPECT_EQ(all_laws().size(), 7u);
}

TEST(Verify, EveryLawPassesOnItsFixture) {
  const std::vector<std::pair<Law, const char*>> cases{
      {Law::kLemma1, "fig1"}, {Law::kLemma3, "fig1-sel-child"}, {Law::kLemma4, "nested-sel"},
      {Law::kThm1, "fig3a"},  {Law::kThm7, "fig4"},             {Law::kShm, "fig2"},
      {Law::kLauritzen, "fig1"}};
  for (const auto& [law, name] : cases) {
    const VerifyReport r = verify_law(law, problem(name), 10, 1);
    EXPECT_TRUE(r.passed()) << law_name(law);
    for (const auto& c : r.checks) {
      EXPECT_EQ(c.trials, 10u);
      EXPECT_EQ(c.failures, 0u);
      EXPECT_LE(c.max_error, c.tolerance);
    }
  }
}

TEST(Verify, DirectionsAreReported) {
  EXPECT_EQ(verify_law(Law::kThm1, problem("fig3a"), 2, 0).checks.size(), 2u);
  EXPECT_EQ(verify_law(Law::kLemma4, problem("nested-sel"), 2, 0).checks.size(), 2u);
  EXPECT_EQ(verify_law(Law::kThm7, problem("fig4"), 2, 0).checks.size(), 2u);
}

TEST(Verify, SeedsAreReproducible) {
  const VerifyReport a = verify_law(Law::kThm7, problem("fig4"), 5, 9);
  const VerifyReport b = verify_law(Law::kThm7, problem("fig4"), 5, 9);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].max_error, b.checks[i].max_error);
}

TEST(Verify, TighterToleranceCanFail) {
  const VerifyReport r = verify_law(Law::kShm, testing::fixture("fig1").selection_problem(), 5, 0, 1e-30);
  EXPECT_FALSE(r.passed());
}

TEST(Verify, InapplicableLawsThrowPrecondition) {
  for (const auto& [law, name] : std::vector<std::pair<Law, const char*>>{
           {Law::kThm7, "fig1"}, {Law::kLemma4, "fig1"}, {Law::kThm1, "fig1-sel-child"}}) {
    try {
      verify_law(law, problem(name), 1, 0);
      ADD_FAILURE() << law_name(law) << " on " << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
    }
  }
}

}  // namespace
}  // namespace selbn
