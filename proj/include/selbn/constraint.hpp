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

// Membership of a conditional q(O1, O2, O3 | O4) of binary variables in the
// model of O1 -> O2 -> O3 with O4 a child of all three, seen through
// conditioning on O4. q is consistent iff some r over O4 makes q r satisfy
// O1 _||_ O3 | O2, i.e. iff two quadratics in r1 (with r2 = 1 - r1) share
// a root in [0, 1].

#ifndef SELBN_CONSTRAINT_HPP_
#define SELBN_CONSTRAINT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selbn/prob.hpp"

namespace selbn {

// c11 r1^2 + c12 r1 r2 + c22 r2^2.
struct BivariateQuadratic {
  double c11 = 0.0, c12 = 0.0, c22 = 0.0;

  double operator()(double r1, double r2) const { return c11 * r1 * r1 + c12 * r1 * r2 + c22 * r2 * r2; }
  // Coefficients {a2, a1, a0} in r1 after r2 = 1 - r1.
  std::array<double, 3> univariate() const;
};

struct PolySystem {
  // q[i][j][k][l] = q(O1 = i, O2 = j, O3 = k | O4 = l), 0-based states.
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> q{};
  // One equation per state j of O2.
  std::array<BivariateQuadratic, 2> equations;
};

// Reads over[0..2] as O1..O3 and the single given variable as O4, by
// position. Throws kInvalidArgument unless all four are binary.
PolySystem build_system(const CondTable& q);

// Sylvester resultant of a2 x^2 + a1 x + a0 and b2 x^2 + b1 x + b0.
double sylvester_resultant(const std::array<double, 3>& a, const std::array<double, 3>& b);

inline constexpr double kDefaultConstraintTolerance = 1e-9;
inline constexpr double kRootMatchTolerance = 1e-7;

struct MembershipVerdict {
  bool consistent = false;
  std::vector<std::array<double, 2>> roots;  // (r1, r2), r1 in [0, 1]
  double resultant_value = 0.0;              // of the max-abs normalised quadratics
  double tolerance_used = kDefaultConstraintTolerance;
  bool marginal = false;          // resultant within two decades of the tolerance
  bool identically_zero = false;  // every r1 in [0, 1] solves the system
};

MembershipVerdict solve_membership(const PolySystem& sys, double tol = kDefaultConstraintTolerance);

struct ClassificationReport {
  MembershipVerdict verdict;
  // CI statements among O1..O3 that hold in every slice, e.g. "O1 _||_ O3 | O2".
  std::vector<std::string> ci_in_every_slice;
  // Largest KL of a slice against the saturated model over O1..O3.
  std::optional<double> saturated_kl;
  // KL of q(o | O4) r(O4) with uniform r against the model's SHM (saturated).
  std::optional<double> shm_kl;
};

ClassificationReport classify_conditional(const CondTable& q, double tol = kDefaultConstraintTolerance);

struct DemoRow {
  std::size_t trials = 0;
  std::size_t consistent = 0;
  std::size_t recovered = 0;         // forward rows: a root within 1e-7 of p(O4 = 0)
  std::size_t resultant_small = 0;   // |resultant| <= 1e-9
  std::size_t resultant_large = 0;   // |resultant| > 1e-4
  double max_abs_resultant = 0.0;
  std::size_t max_roots = 0;
};

struct DemoSummary {
  DemoRow forward;  // conditionals of random positive BNs on the four-node graph
  DemoRow generic;  // independent Dirichlet(1) draws per O4 slice
};

// The four observed nodes in declaration order with O4 last.
Dag constraint_graph();

DemoSummary constraint_demo(std::size_t trials, std::uint64_t seed, double tol = kDefaultConstraintTolerance);

}  // namespace selbn

#endif  // SELBN_CONSTRAINT_HPP_
