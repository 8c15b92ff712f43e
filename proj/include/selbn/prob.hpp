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

// Exact dense categorical distributions: factors, joint and conditional
// tables, Bayesian-network parameterisations, CI testing and iterative
// proportional fitting onto hierarchical models.
//
// Table operations align variables by name, never by position.

#ifndef SELBN_PROB_HPP_
#define SELBN_PROB_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "selbn/graph.hpp"

namespace selbn {

struct Variable {
  std::string name;
  int card = 2;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using Assignment = std::map<std::string, int>;
using Cardinalities = std::map<std::string, int>;

// Nonnegative table over variables, row-major (last variable fastest).
class Factor {
 public:
  Factor() : values_{1.0} {}
  Factor(std::vector<Variable> vars, std::vector<double> values);
  static Factor filled(std::vector<Variable> vars, double value);

  const std::vector<Variable>& vars() const noexcept { return vars_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::vector<std::string> names() const;
  bool has(std::string_view name) const;

  // assignment must cover every variable of the factor; extras are ignored.
  double at(const Assignment& assignment) const;
  std::size_t offset(const Assignment& assignment) const;
  // States of every variable for a row-major offset.
  Assignment assignment_at(std::size_t offset) const;

  // Sums out everything not in keep; keep fixes the variable order.
  Factor marginal(const std::vector<std::string>& keep) const;
  Factor reorder(const std::vector<std::string>& order) const { return marginal(order); }
  // Variables of *this first, then the new ones of other.
  Factor product(const Factor& other) const;
  // Entrywise division by a factor over a subset of the variables; 0/0 = 0.
  Factor divide(const Factor& other) const;
  // Fixes the given variables and drops them.
  Factor reduce(const Assignment& fixed) const;
  Factor scaled(double s) const;
  double sum() const;
  double max_value() const;

  // Max-abs difference after aligning b to a's variable order. Throws
  // kInvalidArgument when the variable sets differ.
  friend double max_abs_diff(const Factor& a, const Factor& b);

 private:
  std::vector<Variable> vars_;
  std::vector<double> values_;
};

std::size_t table_size(const std::vector<Variable>& vars);

class JointTable {
 public:
  JointTable() = default;
  // Throws kInvalidArgument unless entries are >= 0 and sum to 1 (1e-12).
  explicit JointTable(Factor f);
  static JointTable uniform(std::vector<Variable> vars);

  const Factor& factor() const noexcept { return f_; }
  const std::vector<Variable>& vars() const noexcept { return f_.vars(); }
  const std::vector<double>& values() const noexcept { return f_.values(); }
  double operator()(const Assignment& a) const { return f_.at(a); }

  JointTable marginal(const std::vector<std::string>& keep) const;
  bool strictly_positive() const;

 private:
  Factor f_;
};

// p(over | given). Stored as a factor over given ++ over.
class CondTable {
 public:
  CondTable() = default;
  // Throws kInvalidArgument unless every given-slice sums to 1 (1e-12).
  CondTable(std::vector<Variable> given, std::vector<Variable> over, std::vector<double> values);
  // f must be over given ++ over in that order.
  CondTable(std::vector<Variable> given, Factor f);

  const std::vector<Variable>& given() const noexcept { return given_; }
  std::vector<Variable> over() const;
  const Factor& factor() const noexcept { return f_; }
  double operator()(const Assignment& a) const { return f_.at(a); }

  // Requires an empty given set.
  JointTable as_joint() const;

 private:
  std::vector<Variable> given_;
  Factor f_;
};

// Normalises every slice of f over `over` given the remaining variables.
// Throws kZeroConditioningEvent when a slice has zero mass.
CondTable normalize_conditional(const Factor& f, const std::vector<std::string>& over);

// p(rest | given, S = s): sums nothing out; every variable not in given or
// selection ends up in `over`. Works on joint and conditional tables.
CondTable condition(const JointTable& p, const NodeSet& given, const Assignment& selection);
CondTable condition(const CondTable& p, const NodeSet& given, const Assignment& selection);

bool is_ci(const JointTable& p, const NodeSet& x, const NodeSet& y, const NodeSet& z, double tol);

// Checks the local Markov condition of every node of g.
bool in_bn_model(const JointTable& p, const Dag& g, double tol);

class CategoricalBn {
 public:
  CategoricalBn() = default;
  // One CPT per random node, given == its parents (any order), over == node.
  CategoricalBn(ConditionalDag graph, Cardinalities cards, std::map<std::string, CondTable> cpts);
  CategoricalBn(const Dag& graph, Cardinalities cards, std::map<std::string, CondTable> cpts)
      : CategoricalBn(ConditionalDag(graph, {}), std::move(cards), std::move(cpts)) {}

  const ConditionalDag& graph() const noexcept { return graph_; }
  const Dag& dag() const noexcept { return graph_.graph(); }
  const Cardinalities& cards() const noexcept { return cards_; }
  const std::map<std::string, CondTable>& cpts() const noexcept { return cpts_; }
  const CondTable& cpt(const std::string& node) const;
  Variable variable(const std::string& node) const { return {node, cards_.at(node)}; }
  std::vector<Variable> variables(const std::vector<std::string>& nodes) const;

 private:
  ConditionalDag graph_;
  Cardinalities cards_;
  std::map<std::string, CondTable> cpts_;
};

// Product of the CPTs; variables in the graph's declaration order.
// Throws kInvalidArgument if the graph has fixed nodes.
JointTable joint_of(const CategoricalBn& bn);
// p(random | fixed) for conditional graphs (also fine with no fixed nodes).
CondTable conditional_joint_of(const CategoricalBn& bn);

// Builds a CPT for node with the given parents from a factor laid out in
// any order over parents + node; rows are normalised.
CondTable make_cpt(const Factor& f, const std::string& node, const std::vector<std::string>& parents);

struct HierarchicalSpec {
  std::vector<Variable> variables;
  std::vector<NodeSet> generators;

  // Throws kInvalidArgument when a generator is nested in another, names an
  // unknown variable, or the generators do not cover every variable.
  void validate() const;
};

// Inclusion-maximal distinct members of sets; empty sets dropped; sorted.
std::vector<NodeSet> maximal_sets(const std::vector<NodeSet>& sets);

struct IpfResult {
  JointTable fitted;
  double kl = 0.0;
  std::size_t iterations = 0;
  double max_margin_error = 0.0;
  std::vector<double> kl_trace;  // after each sweep
};

inline constexpr std::size_t kDefaultIpfIterations = 10000;
inline constexpr double kDefaultIpfTolerance = 1e-13;

// Fits spec to p by iterative proportional fitting from the uniform table.
// p must be strictly positive (kNotPositive). Stops once every generator
// margin is within tol; throws kNonConvergence if that does not happen
// within max_iters sweeps.
IpfResult ipf_fit(const JointTable& p, const HierarchicalSpec& spec, std::size_t max_iters = kDefaultIpfIterations,
                  double tol = kDefaultIpfTolerance);

// KL(p || q) with 0 log 0 = 0. q must cover p's support.
double kl_divergence(const JointTable& p, const JointTable& q);

// Portable Dirichlet(1) draws from mt19937_64, so tables are identical
// across standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // in (0, 1)
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  std::vector<double> dirichlet(std::size_t k);

 private:
  std::mt19937_64 engine_;
};

// Seed mixing for per-trial streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr double kDefaultFloor = 0.01;

// Dirichlet(1) rows mixed with the floor so every entry is >= floor.
// floor must lie in (0, 1/k] for the largest cardinality k.
CategoricalBn random_bn(const ConditionalDag& g, const Cardinalities& cards, std::uint64_t seed,
                        double floor = kDefaultFloor);
CategoricalBn random_bn(const Dag& g, const Cardinalities& cards, std::uint64_t seed, double floor = kDefaultFloor);
// A random strictly positive joint table (one floored Dirichlet draw).
JointTable random_joint(const std::vector<Variable>& vars, Rng& rng, double floor = kDefaultFloor);

}  // namespace selbn

#endif  // SELBN_PROB_HPP_
