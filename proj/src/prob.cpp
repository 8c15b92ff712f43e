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

#include "selbn/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "selbn/error.hpp"

namespace selbn {
namespace {

constexpr double kNormTol = 1e-12;

std::vector<std::size_t> strides(const std::vector<Variable>& vars) {
  std::vector<std::size_t> s(vars.size(), 1);
  for (std::size_t k = vars.size(); k-- > 1;) s[k - 1] = s[k] * static_cast<std::size_t>(vars[k].card);
  return s;
}

const Variable* find_var(const std::vector<Variable>& vars, std::string_view name) {
  for (const auto& v : vars)
    if (v.name == name) return &v;
  return nullptr;
}

// For every row-major offset over iter, the offset of the same states in
// target; variables of iter missing from target contribute nothing.
std::vector<std::size_t> strided_offsets(const std::vector<Variable>& iter, const std::vector<Variable>& target) {
  const auto tstride = strides(target);
  std::vector<std::size_t> step(iter.size(), 0);
  for (std::size_t i = 0; i < iter.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j)
      if (iter[i].name == target[j].name) {
        if (iter[i].card != target[j].card)
          fail(ErrorCode::kInvalidArgument, "cardinality mismatch for '" + iter[i].name + "'");
        step[i] = tstride[j];
      }
  const std::size_t total = table_size(iter);
  std::vector<std::size_t> out(total);
  std::vector<int> states(iter.size(), 0);
  std::size_t acc = 0;
  for (std::size_t linear = 0; linear < total; ++linear) {
    out[linear] = acc;
    for (std::size_t k = iter.size(); k-- > 0;) {
      ++states[k];
      acc += step[k];
      if (states[k] < iter[k].card) break;
      acc -= step[k] * static_cast<std::size_t>(iter[k].card);
      states[k] = 0;
    }
  }
  return out;
}

// dst must be a subset of src.
std::vector<std::size_t> projection(const std::vector<Variable>& src, const std::vector<Variable>& dst) {
  for (const auto& v : dst)
    if (!find_var(src, v.name)) fail(ErrorCode::kInvalidArgument, "variable '" + v.name + "' not in table");
  return strided_offsets(src, dst);
}

std::vector<Variable> select_vars(const std::vector<Variable>& vars, const std::vector<std::string>& names) {
  std::vector<Variable> out;
  for (const auto& n : names) {
    const Variable* v = find_var(vars, n);
    if (!v) fail(ErrorCode::kUnknownNode, "variable '" + n + "' not in table");
    out.push_back(*v);
  }
  return out;
}

std::vector<std::string> ordered_subset(const std::vector<Variable>& vars, const NodeSet& names) {
  std::vector<std::string> out;
  for (const auto& v : vars)
    if (names.count(v.name)) out.push_back(v.name);
  return out;
}

void require_vars(const std::vector<Variable>& vars, const NodeSet& names) {
  for (const auto& n : names)
    if (!find_var(vars, n)) fail(ErrorCode::kUnknownNode, "variable '" + n + "' not in table");
}

}  // namespace

std::size_t table_size(const std::vector<Variable>& vars) {
  std::size_t n = 1;
  for (const auto& v : vars) n *= static_cast<std::size_t>(v.card);
  return n;
}

Factor::Factor(std::vector<Variable> vars, std::vector<double> values)
    : vars_(std::move(vars)), values_(std::move(values)) {
  NodeSet seen;
  for (const auto& v : vars_) {
    if (v.card < 1) fail(ErrorCode::kInvalidArgument, "variable '" + v.name + "' needs at least one state");
    if (!seen.insert(v.name).second) fail(ErrorCode::kInvalidArgument, "duplicate variable '" + v.name + "'");
  }
  if (values_.size() != table_size(vars_)) fail(ErrorCode::kInvalidArgument, "table size does not match variables");
  for (double x : values_)
    if (!(x >= 0.0) || !std::isfinite(x)) fail(ErrorCode::kInvalidArgument, "table entries must be finite and >= 0");
}

Factor Factor::filled(std::vector<Variable> vars, double value) {
  const std::size_t n = table_size(vars);
  return Factor(std::move(vars), std::vector<double>(n, value));
}

std::vector<std::string> Factor::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

bool Factor::has(std::string_view name) const { return find_var(vars_, name) != nullptr; }

std::size_t Factor::offset(const Assignment& assignment) const {
  const auto s = strides(vars_);
  std::size_t off = 0;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = assignment.find(vars_[k].name);
    if (it == assignment.end()) fail(ErrorCode::kInvalidArgument, "assignment misses '" + vars_[k].name + "'");
    if (it->second < 0 || it->second >= vars_[k].card)
      fail(ErrorCode::kInvalidArgument, "state out of range for '" + vars_[k].name + "'");
    off += s[k] * static_cast<std::size_t>(it->second);
  }
  return off;
}

double Factor::at(const Assignment& assignment) const { return values_[offset(assignment)]; }

Assignment Factor::assignment_at(std::size_t offset) const {
  Assignment a;
  for (std::size_t k = vars_.size(); k-- > 0;) {
    a[vars_[k].name] = static_cast<int>(offset % static_cast<std::size_t>(vars_[k].card));
    offset /= static_cast<std::size_t>(vars_[k].card);
  }
  return a;
}

Factor Factor::marginal(const std::vector<std::string>& keep) const {
  auto dst = select_vars(vars_, keep);
  const auto proj = projection(vars_, dst);
  std::vector<double> out(table_size(dst), 0.0);
  for (std::size_t i = 0; i < values_.size(); ++i) out[proj[i]] += values_[i];
  return Factor(std::move(dst), std::move(out));
}

Factor Factor::product(const Factor& other) const {
  auto vars = vars_;
  for (const auto& v : other.vars_) {
    const Variable* mine = find_var(vars_, v.name);
    if (!mine) vars.push_back(v);
    else if (mine->card != v.card) fail(ErrorCode::kInvalidArgument, "cardinality mismatch for '" + v.name + "'");
  }
  const auto pa = projection(vars, vars_);
  const auto pb = projection(vars, other.vars_);
  std::vector<double> out(pa.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[pa[i]] * other.values_[pb[i]];
  return Factor(std::move(vars), std::move(out));
}

Factor Factor::divide(const Factor& other) const {
  const auto pb = projection(vars_, other.vars_);
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d = other.values_[pb[i]];
    out[i] = d == 0.0 ? 0.0 : values_[i] / d;
  }
  return Factor(vars_, std::move(out));
}

Factor Factor::reduce(const Assignment& fixed) const {
  std::vector<Variable> kept;
  Assignment base;
  for (const auto& v : vars_) {
    auto it = fixed.find(v.name);
    if (it == fixed.end()) {
      kept.push_back(v);
      base[v.name] = 0;
    } else {
      base[v.name] = it->second;
    }
  }
  const std::size_t start = offset(base);
  const auto embed = strided_offsets(kept, vars_);
  std::vector<double> out(embed.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[start + embed[i]];
  return Factor(std::move(kept), std::move(out));
}

Factor Factor::scaled(double s) const {
  auto out = values_;
  for (auto& x : out) x *= s;
  return Factor(vars_, std::move(out));
}

double Factor::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double Factor::max_value() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

double max_abs_diff(const Factor& a, const Factor& b) {
  if (a.vars().size() != b.vars().size()) fail(ErrorCode::kInvalidArgument, "tables have different variables");
  const Factor aligned = b.reorder(a.names());
  if (aligned.vars() != a.vars()) fail(ErrorCode::kInvalidArgument, "tables have different variables");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.values()[i] - aligned.values()[i]));
  return worst;
}

JointTable::JointTable(Factor f) : f_(std::move(f)) {
  if (std::abs(f_.sum() - 1.0) > kNormTol) fail(ErrorCode::kInvalidArgument, "joint table does not sum to 1");
}

JointTable JointTable::uniform(std::vector<Variable> vars) {
  const double n = static_cast<double>(table_size(vars));
  return JointTable(Factor::filled(std::move(vars), 1.0 / n));
}

JointTable JointTable::marginal(const std::vector<std::string>& keep) const { return JointTable(f_.marginal(keep)); }

bool JointTable::strictly_positive() const {
  return std::all_of(values().begin(), values().end(), [](double x) { return x > 0.0; });
}

CondTable::CondTable(std::vector<Variable> given, std::vector<Variable> over, std::vector<double> values) {
  auto vars = given;
  vars.insert(vars.end(), over.begin(), over.end());
  *this = CondTable(std::move(given), Factor(std::move(vars), std::move(values)));
}

CondTable::CondTable(std::vector<Variable> given, Factor f) : given_(std::move(given)), f_(std::move(f)) {
  if (given_.size() > f_.vars().size() || !std::equal(given_.begin(), given_.end(), f_.vars().begin()))
    fail(ErrorCode::kInvalidArgument, "conditional table layout must be given ++ over");
  const std::size_t slice = table_size(over());
  for (std::size_t start = 0; start < f_.size(); start += slice) {
    double s = 0.0;
    for (std::size_t i = 0; i < slice; ++i) s += f_.values()[start + i];
    if (std::abs(s - 1.0) > kNormTol) fail(ErrorCode::kInvalidArgument, "conditional slice does not sum to 1");
  }
}

std::vector<Variable> CondTable::over() const {
  return std::vector<Variable>(f_.vars().begin() + static_cast<std::ptrdiff_t>(given_.size()), f_.vars().end());
}

JointTable CondTable::as_joint() const {
  if (!given_.empty()) fail(ErrorCode::kInvalidArgument, "conditional table has a non-empty given set");
  return JointTable(f_);
}

CondTable normalize_conditional(const Factor& f, const std::vector<std::string>& over) {
  NodeSet over_set(over.begin(), over.end());
  std::vector<std::string> order;
  std::vector<Variable> given;
  for (const auto& v : f.vars())
    if (!over_set.count(v.name)) {
      order.push_back(v.name);
      given.push_back(v);
    }
  order.insert(order.end(), over.begin(), over.end());
  Factor aligned = f.reorder(order);
  auto& values = aligned.mutable_values();
  const std::size_t slice = table_size(select_vars(f.vars(), over));
  for (std::size_t start = 0; start < values.size(); start += slice) {
    double s = 0.0;
    for (std::size_t i = 0; i < slice; ++i) s += values[start + i];
    if (!(s > 0.0)) fail(ErrorCode::kZeroConditioningEvent, "conditioning event has probability zero");
    for (std::size_t i = 0; i < slice; ++i) values[start + i] /= s;
  }
  return CondTable(std::move(given), std::move(aligned));
}

namespace {

CondTable condition_factor(const Factor& f, const NodeSet& given, const Assignment& selection) {
  for (const auto& [name, value] : selection)
    if (given.count(name)) fail(ErrorCode::kInvalidArgument, "'" + name + "' is both given and selected");
  NodeSet sel;
  for (const auto& [name, value] : selection) sel.insert(name);
  require_vars(f.vars(), sel);
  require_vars(f.vars(), given);
  const Factor reduced = f.reduce(selection);
  std::vector<std::string> over;
  for (const auto& v : reduced.vars())
    if (!given.count(v.name)) over.push_back(v.name);
  return normalize_conditional(reduced, over);
}

}  // namespace

CondTable condition(const JointTable& p, const NodeSet& given, const Assignment& selection) {
  return condition_factor(p.factor(), given, selection);
}

CondTable condition(const CondTable& p, const NodeSet& given, const Assignment& selection) {
  return condition_factor(p.factor(), given, selection);
}

bool is_ci(const JointTable& p, const NodeSet& x, const NodeSet& y, const NodeSet& z, double tol) {
  require_vars(p.vars(), x);
  require_vars(p.vars(), y);
  require_vars(p.vars(), z);
  if (x.empty() || y.empty()) fail(ErrorCode::kInvalidArgument, "CI test needs nonempty x and y");
  auto xs = ordered_subset(p.vars(), x);
  auto ys = ordered_subset(p.vars(), y);
  auto zs = ordered_subset(p.vars(), z);
  NodeSet all;
  for (const auto* part : {&xs, &ys, &zs})
    for (const auto& n : *part)
      if (!all.insert(n).second) fail(ErrorCode::kInvalidArgument, "CI sets must be disjoint");

  std::vector<std::string> order = xs;
  order.insert(order.end(), ys.begin(), ys.end());
  order.insert(order.end(), zs.begin(), zs.end());
  auto xz = xs;
  xz.insert(xz.end(), zs.begin(), zs.end());
  auto yz = ys;
  yz.insert(yz.end(), zs.begin(), zs.end());

  const Factor m = p.factor().marginal(order);
  const Factor pz = m.marginal(zs);
  const Factor pxz = m.marginal(xz);
  const Factor pyz = m.marginal(yz);
  const auto iz = projection(m.vars(), pz.vars());
  const auto ixz = projection(m.vars(), pxz.vars());
  const auto iyz = projection(m.vars(), pyz.vars());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double lhs = m.values()[i] * pz.values()[iz[i]];
    const double rhs = pxz.values()[ixz[i]] * pyz.values()[iyz[i]];
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

bool in_bn_model(const JointTable& p, const Dag& g, double tol) {
  for (const auto& node : g.nodes()) {
    const NodeSet pa = g.parents(node);
    const NodeSet de = descendants(g, {node});
    NodeSet rest;
    for (const auto& v : g.nodes())
      if (!pa.count(v) && !de.count(v)) rest.insert(v);
    if (rest.empty()) continue;
    if (!is_ci(p, {node}, rest, pa, tol)) return false;
  }
  return true;
}

CategoricalBn::CategoricalBn(ConditionalDag graph, Cardinalities cards, std::map<std::string, CondTable> cpts)
    : graph_(std::move(graph)), cards_(std::move(cards)), cpts_(std::move(cpts)) {
  const Dag& g = graph_.graph();
  for (const auto& node : g.nodes()) {
    auto it = cards_.find(node);
    if (it == cards_.end() || it->second < 1)
      fail(ErrorCode::kInvalidArgument, "missing cardinality for '" + node + "'");
  }
  for (const auto& [node, cpt] : cpts_)
    if (!g.contains(node) || graph_.is_fixed(node))
      fail(ErrorCode::kInvalidArgument, "CPT for '" + node + "' does not belong to a random node");
  for (const auto& node : graph_.random_in_order()) {
    auto it = cpts_.find(node);
    if (it == cpts_.end()) fail(ErrorCode::kInvalidArgument, "missing CPT for '" + node + "'");
    const CondTable& cpt = it->second;
    const auto over = cpt.over();
    if (over.size() != 1 || over[0] != variable(node))
      fail(ErrorCode::kInvalidArgument, "CPT for '" + node + "' must be over that node alone");
    NodeSet given;
    for (const auto& v : cpt.given()) {
      if (!cards_.count(v.name) || v.card != cards_.at(v.name))
        fail(ErrorCode::kInvalidArgument, "CPT for '" + node + "' has a bad parent '" + v.name + "'");
      given.insert(v.name);
    }
    if (given != g.parents(node)) fail(ErrorCode::kInvalidArgument, "CPT for '" + node + "' must be given its parents");
  }
}

const CondTable& CategoricalBn::cpt(const std::string& node) const {
  auto it = cpts_.find(node);
  if (it == cpts_.end()) fail(ErrorCode::kUnknownNode, "no CPT for '" + node + "'");
  return it->second;
}

std::vector<Variable> CategoricalBn::variables(const std::vector<std::string>& nodes) const {
  std::vector<Variable> out;
  for (const auto& n : nodes) out.push_back(variable(n));
  return out;
}

CondTable conditional_joint_of(const CategoricalBn& bn) {
  const Dag& g = bn.dag();
  Factor product;
  for (auto i : g.topological_order()) {
    const auto& node = g.name(i);
    if (bn.graph().is_fixed(node)) continue;
    product = product.product(bn.cpt(node).factor());
  }
  std::vector<std::string> given_names, order;
  std::vector<Variable> given;
  for (const auto& node : g.nodes())
    if (bn.graph().is_fixed(node)) {
      given_names.push_back(node);
      given.push_back(bn.variable(node));
    }
  order = given_names;
  for (const auto& node : bn.graph().random_in_order()) order.push_back(node);
  // Fixed nodes without random children never enter the product.
  for (const auto& name : given_names)
    if (!product.has(name)) product = product.product(Factor::filled({bn.variable(name)}, 1.0));
  return CondTable(std::move(given), product.reorder(order));
}

JointTable joint_of(const CategoricalBn& bn) {
  if (!bn.graph().fixed_nodes().empty()) fail(ErrorCode::kInvalidArgument, "graph has fixed nodes; use the conditional form");
  return conditional_joint_of(bn).as_joint();
}

CondTable make_cpt(const Factor& f, const std::string& node, const std::vector<std::string>& parents) {
  std::vector<std::string> order = parents;
  order.push_back(node);
  if (f.vars().size() != order.size()) fail(ErrorCode::kInvalidArgument, "CPT factor has extra variables");
  return normalize_conditional(f.reorder(order), {node});
}

void HierarchicalSpec::validate() const {
  NodeSet names;
  for (const auto& v : variables) names.insert(v.name);
  NodeSet covered;
  for (std::size_t a = 0; a < generators.size(); ++a) {
    for (const auto& v : generators[a])
      if (!names.count(v)) fail(ErrorCode::kInvalidArgument, "generator names unknown variable '" + v + "'");
    covered.insert(generators[a].begin(), generators[a].end());
    for (std::size_t b = 0; b < generators.size(); ++b)
      if (a != b && std::includes(generators[b].begin(), generators[b].end(), generators[a].begin(),
                                  generators[a].end()))
        fail(ErrorCode::kInvalidArgument, "generators must be inclusion-maximal and distinct");
  }
  if (covered != names) fail(ErrorCode::kInvalidArgument, "generators do not cover every variable");
}

std::vector<NodeSet> maximal_sets(const std::vector<NodeSet>& sets) {
  std::set<NodeSet> unique;
  for (const auto& s : sets)
    if (!s.empty()) unique.insert(s);
  std::vector<NodeSet> out;
  for (const auto& s : unique) {
    bool nested = false;
    for (const auto& t : unique)
      if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) nested = true;
    if (!nested) out.push_back(s);
  }
  return out;
}

double kl_divergence(const JointTable& p, const JointTable& q) {
  const Factor aligned = q.factor().reorder(p.factor().names());
  double kl = 0.0;
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    const double a = p.values()[i];
    if (a == 0.0) continue;
    const double b = aligned.values()[i];
    if (b == 0.0) return std::numeric_limits<double>::infinity();
    kl += a * std::log(a / b);
  }
  return std::max(kl, 0.0);
}

IpfResult ipf_fit(const JointTable& p, const HierarchicalSpec& spec, std::size_t max_iters, double tol) {
  if (!p.strictly_positive()) fail(ErrorCode::kNotPositive, "iterative proportional fitting needs a positive table");
  spec.validate();
  {
    std::vector<Variable> a = spec.variables, b = p.vars();
    auto by_name = [](const Variable& l, const Variable& r) { return l.name < r.name; };
    std::sort(a.begin(), a.end(), by_name);
    std::sort(b.begin(), b.end(), by_name);
    if (a != b) fail(ErrorCode::kInvalidArgument, "specification variables differ from the table's");
  }

  struct Margin {
    std::vector<std::size_t> proj;
    std::vector<double> target;
  };
  std::vector<Margin> margins;
  for (const auto& gen : spec.generators) {
    const Factor m = p.factor().marginal(ordered_subset(p.vars(), gen));
    margins.push_back({projection(p.vars(), m.vars()), m.values()});
  }

  std::vector<double> fitted(p.values().size(), 1.0 / static_cast<double>(p.values().size()));
  auto current = [&](const Margin& m) {
    std::vector<double> cur(m.target.size(), 0.0);
    for (std::size_t i = 0; i < fitted.size(); ++i) cur[m.proj[i]] += fitted[i];
    return cur;
  };

  IpfResult result;
  double error = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < max_iters && error > tol; ++it) {
    for (const auto& m : margins) {
      const auto cur = current(m);
      for (std::size_t i = 0; i < fitted.size(); ++i) fitted[i] *= m.target[m.proj[i]] / cur[m.proj[i]];
    }
    error = 0.0;
    for (const auto& m : margins) {
      const auto cur = current(m);
      for (std::size_t k = 0; k < cur.size(); ++k) error = std::max(error, std::abs(cur[k] - m.target[k]));
    }
    ++result.iterations;
    double kl = 0.0;
    for (std::size_t i = 0; i < fitted.size(); ++i) kl += p.values()[i] * std::log(p.values()[i] / fitted[i]);
    result.kl_trace.push_back(std::max(kl, 0.0));
  }
  if (error > tol)
    fail(ErrorCode::kNonConvergence, "IPF did not converge in " + std::to_string(max_iters) + " sweeps");

  const double total = std::accumulate(fitted.begin(), fitted.end(), 0.0);
  for (auto& x : fitted) x /= total;
  result.fitted = JointTable(Factor(p.vars(), std::move(fitted)));
  result.kl = kl_divergence(p, result.fitted);
  result.max_margin_error = error;
  return result;
}

double Rng::uniform() {
  return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

std::vector<double> Rng::dirichlet(std::size_t k) {
  std::vector<double> out(k);
  double total = 0.0;
  for (auto& x : out) {
    x = -std::log(uniform());
    total += x;
  }
  for (auto& x : out) x /= total;
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL));
}

CategoricalBn random_bn(const ConditionalDag& g, const Cardinalities& cards, std::uint64_t seed, double floor) {
  int max_card = 1;
  for (const auto& node : g.graph().nodes()) {
    auto it = cards.find(node);
    if (it == cards.end()) fail(ErrorCode::kInvalidArgument, "missing cardinality for '" + node + "'");
    max_card = std::max(max_card, it->second);
  }
  if (!(floor > 0.0) || floor * max_card > 1.0 + 1e-15)
    fail(ErrorCode::kInvalidArgument, "positivity floor must lie in (0, 1/max cardinality]");

  Rng rng(seed);
  std::map<std::string, CondTable> cpts;
  for (const auto& node : g.random_in_order()) {
    std::vector<Variable> given;
    for (auto i : g.graph().parent_indices(g.graph().index(node)))
      given.push_back({g.graph().name(i), cards.at(g.graph().name(i))});
    const int k = cards.at(node);
    const std::size_t rows = table_size(given);
    std::vector<double> values;
    values.reserve(rows * static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < rows; ++r) {
      const auto d = rng.dirichlet(static_cast<std::size_t>(k));
      double s = 0.0;
      std::vector<double> row(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) {
        row[j] = floor + (1.0 - k * floor) * d[j];
        s += row[j];
      }
      for (double x : row) values.push_back(x / s);
    }
    cpts.emplace(node, CondTable(std::move(given), {{node, k}}, std::move(values)));
  }
  return CategoricalBn(g, cards, std::move(cpts));
}

CategoricalBn random_bn(const Dag& g, const Cardinalities& cards, std::uint64_t seed, double floor) {
  return random_bn(ConditionalDag(g, {}), cards, seed, floor);
}

JointTable random_joint(const std::vector<Variable>& vars, Rng& rng, double floor) {
  const std::size_t n = table_size(vars);
  const auto d = rng.dirichlet(n);
  std::vector<double> values(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = floor / static_cast<double>(n) + (1.0 - floor) * d[i];
    total += values[i];
  }
  for (auto& x : values) x /= total;
  return JointTable(Factor(vars, std::move(values)));
}

}  // namespace selbn
