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

// Randomised checks of the model equalities behind each reduction: every
// trial draws a positive BN, runs the witness constructor and compares the
// two distributions the construction equates.

#ifndef SELBN_VERIFY_HPP_
#define SELBN_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selbn/selection.hpp"

namespace selbn {

enum class Law { kLemma1, kLemma3, kLemma4, kThm1, kThm7, kShm, kLauritzen };

const char* law_name(Law law) noexcept;
std::optional<Law> parse_law(std::string_view name);
std::vector<Law> all_laws();

inline constexpr double kDefaultWitnessTolerance = 1e-10;
inline constexpr double kDefaultShmTolerance = 1e-8;

struct LawCheck {
  std::string name;  // e.g. forward, reverse
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  // max-abs table difference, or KL for shm
  double tolerance = 0.0;
};

struct VerifyReport {
  Law law = Law::kLemma1;
  std::vector<LawCheck> checks;

  bool passed() const;
};

// Throws kPrecondition when the graph does not fit the law: lemma1 needs a
// selection node and two unselected nodes, lemma4 a nested pair of sink
// selection nodes, thm1 sink selection nodes, thm7 exactly one sink
// selection node.
VerifyReport verify_law(Law law, const SelectionProblem& sp, std::size_t trials, std::uint64_t seed,
                        std::optional<double> tol = std::nullopt, double floor = kDefaultFloor);

}  // namespace selbn

#endif  // SELBN_VERIFY_HPP_
