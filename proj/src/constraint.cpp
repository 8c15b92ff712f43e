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

#include "selbn/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "selbn/error.hpp"
#include "selbn/selection.hpp"

namespace selbn {
namespace {

using Poly = std::array<double, 3>;

constexpr double kZeroCoefficient = 1e-12;
constexpr double kDiscriminantClamp = -1e-12;
constexpr double kSimplexSlack = 1e-9;
constexpr double kLargeResultant = 1e-4;

double eval(const Poly& p, double x) { return (p[0] * x + p[1]) * x + p[2]; }

std::optional<Poly> normalised(const Poly& p) {
  const double m = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  if (m <= kZeroCoefficient) return std::nullopt;
  return Poly{p[0] / m, p[1] / m, p[2] / m};
}

double polish(const Poly& p, double x) {
  for (int it = 0; it < 4; ++it) {
    const double d = 2.0 * p[0] * x + p[1];
    if (d == 0.0) break;
    const double step = eval(p, x) / d;
    x -= step;
    if (std::abs(step) < 1e-17) break;
  }
  return x;
}

// Real roots of a max-abs normalised polynomial of degree <= 2.
std::vector<double> real_roots(const Poly& p) {
  std::vector<double> out;
  if (std::abs(p[0]) <= kZeroCoefficient) {
    if (std::abs(p[1]) > kZeroCoefficient) out.push_back(-p[2] / p[1]);
    return out;
  }
  double disc = p[1] * p[1] - 4.0 * p[0] * p[2];
  if (disc < kDiscriminantClamp) return out;
  disc = std::max(disc, 0.0);
  const double q = -0.5 * (p[1] + std::copysign(std::sqrt(disc), p[1]));
  const double x1 = q / p[0];
  out.push_back(polish(p, x1));
  if (q != 0.0) out.push_back(polish(p, p[2] / q));
  return out;
}

void add_root(std::vector<std::array<double, 2>>& roots, double x) {
  if (x < -kSimplexSlack || x > 1.0 + kSimplexSlack) return;
  x = std::clamp(x, 0.0, 1.0);
  for (const auto& r : roots)
    if (std::abs(r[0] - x) <= kRootMatchTolerance) return;
  roots.push_back({x, 1.0 - x});
}

}  // namespace

std::array<double, 3> BivariateQuadratic::univariate() const {
  return {c11 - c12 + c22, c12 - 2.0 * c22, c22};
}

PolySystem build_system(const CondTable& q) {
  const auto over = q.over();
  if (q.given().size() != 1 || over.size() != 3)
    fail(ErrorCode::kInvalidArgument, "expected q over three variables given one");
  if (q.given()[0].card != 2 || std::any_of(over.begin(), over.end(), [](const Variable& v) { return v.card != 2; }))
    fail(ErrorCode::kInvalidArgument, "all four variables must be binary");

  PolySystem sys;
  const auto& v = q.factor().values();
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) sys.q[i][j][k][l] = v[l * 8 + i * 4 + j * 2 + k];

  for (int j = 0; j < 2; ++j) {
    const auto& a = sys.q[0][j][0];
    const auto& b = sys.q[1][j][1];
    const auto& c = sys.q[0][j][1];
    const auto& d = sys.q[1][j][0];
    sys.equations[j] = {a[0] * b[0] - c[0] * d[0], a[0] * b[1] + a[1] * b[0] - c[0] * d[1] - c[1] * d[0],
                        a[1] * b[1] - c[1] * d[1]};
  }
  return sys;
}

double sylvester_resultant(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double m[4][4] = {{a[0], a[1], a[2], 0.0}, {0.0, a[0], a[1], a[2]}, {b[0], b[1], b[2], 0.0}, {0.0, b[0], b[1], b[2]}};
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (m[pivot][c] == 0.0) return 0.0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

MembershipVerdict solve_membership(const PolySystem& sys, double tol) {
  MembershipVerdict v;
  v.tolerance_used = tol;
  const auto pa = normalised(sys.equations[0].univariate());
  const auto pb = normalised(sys.equations[1].univariate());
  v.resultant_value = (pa && pb) ? sylvester_resultant(*pa, *pb) : 0.0;
  const double mag = std::abs(v.resultant_value);
  v.marginal = mag >= tol * 1e-2 && mag <= tol * 1e2;

  if (!pa && !pb) {
    v.consistent = true;
    v.identically_zero = true;
    return v;
  }
  if (!pa || !pb) {
    for (double x : real_roots(pa ? *pa : *pb)) add_root(v.roots, x);
  } else {
    const auto ra = real_roots(*pa);
    const auto rb = real_roots(*pb);
    for (double x : ra)
      for (double y : rb)
        if (std::abs(x - y) <= kRootMatchTolerance) add_root(v.roots, 0.5 * (x + y));
  }
  std::sort(v.roots.begin(), v.roots.end());
  v.consistent = !v.roots.empty();
  return v;
}

Dag constraint_graph() {
  return Dag({"O1", "O2", "O3", "O4"}, {{"O1", "O2"}, {"O2", "O3"}, {"O1", "O4"}, {"O2", "O4"}, {"O3", "O4"}});
}

ClassificationReport classify_conditional(const CondTable& q, double tol) {
  ClassificationReport report;
  report.verdict = solve_membership(build_system(q), tol);
  const auto over = q.over();
  const Variable given = q.given()[0];

  std::vector<JointTable> slices;
  for (std::size_t l = 0; l < 2; ++l) {
    std::vector<double> values(q.factor().values().begin() + static_cast<std::ptrdiff_t>(8 * l),
                               q.factor().values().begin() + static_cast<std::ptrdiff_t>(8 * (l + 1)));
    slices.emplace_back(Factor(over, std::move(values)));
  }

  const std::array<std::array<int, 3>, 3> triples = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [a, b, c] : triples) {
    const std::string x = over[a].name, y = over[b].name, z = over[c].name;
    for (bool conditional : {false, true}) {
      const NodeSet zs = conditional ? NodeSet{z} : NodeSet{};
      const bool holds = std::all_of(slices.begin(), slices.end(),
                                     [&](const JointTable& s) { return is_ci(s, {x}, {y}, zs, tol); });
      if (holds) report.ci_in_every_slice.push_back(x + " _||_ " + y + (conditional ? " | " + z : ""));
    }
  }

  const bool positive =
      std::all_of(slices.begin(), slices.end(), [](const JointTable& s) { return s.strictly_positive(); });
  if (positive) {
    double worst = 0.0;
    for (const auto& s : slices) {
      HierarchicalSpec sat{over, {NodeSet{over[0].name, over[1].name, over[2].name}}};
      worst = std::max(worst, ipf_fit(s, sat).kl);
    }
    report.saturated_kl = worst;

    std::string s = "S";
    while (s == given.name || std::any_of(over.begin(), over.end(), [&](const Variable& v) { return v.name == s; }))
      s += "_";
    std::vector<std::string> nodes = {over[0].name, over[1].name, over[2].name, given.name, s};
    SelectionProblem sp;
    sp.graph = Dag(nodes, {{nodes[0], nodes[1]},
                           {nodes[1], nodes[2]},
                           {nodes[0], nodes[3]},
                           {nodes[1], nodes[3]},
                           {nodes[2], nodes[3]},
                           {nodes[3], s}});
    sp.observed = {nodes[0], nodes[1], nodes[2], nodes[3]};
    sp.selection = {s};
    sp.values = {{s, 0}};
    for (const auto& n : nodes) sp.cards[n] = 2;
    const JointTable joint(q.factor().scaled(0.5));
    report.shm_kl = ipf_fit(joint, shm_of(sp)).kl;
  }
  return report;
}

DemoSummary constraint_demo(std::size_t trials, std::uint64_t seed, double tol) {
  DemoSummary out;
  const Dag g = constraint_graph();
  const Cardinalities cards = {{"O1", 2}, {"O2", 2}, {"O3", 2}, {"O4", 2}};
  auto tally = [&](DemoRow& row, const MembershipVerdict& v) {
    ++row.trials;
    if (v.consistent) ++row.consistent;
    const double mag = std::abs(v.resultant_value);
    if (mag <= tol) ++row.resultant_small;
    if (mag > kLargeResultant) ++row.resultant_large;
    row.max_abs_resultant = std::max(row.max_abs_resultant, mag);
    row.max_roots = std::max(row.max_roots, v.roots.size());
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const JointTable joint = joint_of(random_bn(g, cards, derive_seed(seed, 2 * t)));
    const CondTable q = condition(joint, {"O4"}, {});
    const double truth = joint.factor().marginal({"O4"}).values()[0];
    const MembershipVerdict v = solve_membership(build_system(q), tol);
    tally(out.forward, v);
    if (std::any_of(v.roots.begin(), v.roots.end(),
                    [&](const std::array<double, 2>& r) { return std::abs(r[0] - truth) <= kRootMatchTolerance; }))
      ++out.forward.recovered;
  }

  const std::vector<Variable> over = {{"O1", 2}, {"O2", 2}, {"O3", 2}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 2 * t + 1));
    std::vector<double> values;
    for (int l = 0; l < 2; ++l)
      for (double x : rng.dirichlet(8)) values.push_back(x);
    const CondTable q({{"O4", 2}}, over, std::move(values));
    tally(out.generic, solve_membership(build_system(q), tol));
  }
  return out;
}

}  // namespace selbn
