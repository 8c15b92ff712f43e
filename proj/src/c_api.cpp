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

#include "selbn/selbn.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "selbn/compelled.hpp"
#include "selbn/constraint.hpp"
#include "selbn/error.hpp"
#include "selbn/fixtures.hpp"
#include "selbn/graph_io.hpp"
#include "selbn/markov_equiv.hpp"
#include "selbn/selection.hpp"
#include "selbn/verify.hpp"

struct selbn_graph {
  selbn::GraphFile file;
};

namespace {

using nlohmann::json;
using selbn::ErrorCode;

thread_local std::string g_last_error;
thread_local int g_last_line = 0;

selbn_status status_of(ErrorCode code) { return static_cast<selbn_status>(static_cast<int>(code) + 1); }

template <typename F>
selbn_status guarded(F&& body) {
  g_last_error.clear();
  g_last_line = 0;
  try {
    body();
    return SELBN_OK;
  } catch (const selbn::ParseError& e) {
    g_last_error = e.what();
    g_last_line = e.line();
    return SELBN_ERR_PARSE;
  } catch (const selbn::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    g_last_error = std::string("JSON: ") + e.what();
    return SELBN_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SELBN_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_ptr(const void* p, const char* what) {
  if (!p) selbn::fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

selbn::NodeSet parse_targets(const char* csv, const selbn::Pdag& g) {
  require_ptr(csv, "targets");
  selbn::NodeSet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    if (!g.contains(item)) selbn::fail(ErrorCode::kUnknownNode, "unknown target '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) selbn::fail(ErrorCode::kInvalidArgument, "at least one target is required");
  return out;
}

selbn::Cpdag cpdag_of_file(const selbn::GraphFile& f) {
  const selbn::Pdag p = f.pdag();
  if (p.has_undirected_edges()) return selbn::Cpdag::from_pdag(p);
  return selbn::cpdag_of(selbn::Dag::from_pdag(p));
}

std::string render(const selbn::GraphFile& f, selbn_format format, const json& extra = json::object()) {
  switch (format) {
    case SELBN_FORMAT_JSON: {
      json j = selbn::to_json(f);
      for (const auto& [k, v] : extra.items()) j[k] = v;
      return j.dump();
    }
    case SELBN_FORMAT_DOT:
      return selbn::to_dot(f);
    case SELBN_FORMAT_TEXT:
      break;
  }
  std::string text = selbn::to_text(f);
  for (const auto& [k, v] : extra.items()) text += "# " + k + ": " + v.dump() + "\n";
  return text;
}

void check_format(selbn_format format) {
  if (format != SELBN_FORMAT_TEXT && format != SELBN_FORMAT_JSON && format != SELBN_FORMAT_DOT)
    selbn::fail(ErrorCode::kInvalidArgument, "unknown output format");
}

std::string join(const selbn::NodeSet& s) {
  std::string out;
  for (const auto& n : s) out += (out.empty() ? "" : " ") + n;
  return out.empty() ? "(none)" : out;
}

}  // namespace

extern "C" {

const char* selbn_version(void) { return "0.1.0"; }

const char* selbn_status_string(selbn_status status) {
  if (status == SELBN_OK) return "ok";
  if (status < SELBN_OK || status > SELBN_ERR_INTERNAL) return "unknown status";
  return selbn::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* selbn_last_error(void) { return g_last_error.c_str(); }

int selbn_last_error_line(void) { return g_last_line; }

void selbn_string_free(char* s) { std::free(s); }

selbn_status selbn_graph_parse(const char* text, selbn_graph** out) {
  return guarded([&] {
    require_ptr(text, "text");
    require_ptr(out, "out");
    *out = new selbn_graph{selbn::parse_graph(text)};
  });
}

selbn_status selbn_graph_load(const char* path, selbn_graph** out) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    *out = new selbn_graph{selbn::load_graph_file(path)};
  });
}

selbn_status selbn_graph_fixture(const char* name, selbn_graph** out) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "out");
    *out = new selbn_graph{selbn::parse_graph(selbn::fixture_text(name))};
  });
}

void selbn_graph_free(selbn_graph* g) { delete g; }

size_t selbn_graph_node_count(const selbn_graph* g) { return g ? g->file.nodes.size() : 0; }

selbn_status selbn_graph_render(const selbn_graph* g, selbn_format format, char** out) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out, "out");
    check_format(format);
    *out = dup(render(g->file, format));
  });
}

selbn_status selbn_fixture_names(char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    std::string s;
    for (const auto& n : selbn::fixture_names()) s += n + "\n";
    *out = dup(s);
  });
}

selbn_status selbn_fixture_text(const char* name, char** out) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "out");
    *out = dup(std::string(selbn::fixture_text(name)));
  });
}

selbn_status selbn_cpdag(const selbn_graph* g, selbn_format format, char** out) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out, "out");
    check_format(format);
    const selbn::Cpdag cp = cpdag_of_file(g->file);
    json size = nullptr;
    try {
      size = selbn::enumerate_class(cp).size();
    } catch (const selbn::Error& e) {
      if (e.code() != ErrorCode::kGuardExceeded) throw;
    }
    const json extra = format == SELBN_FORMAT_DOT ? json::object() : json{{"class_size", size}};
    *out = dup(render(g->file.with_graph(cp.pdag()), format, extra));
  });
}

selbn_status selbn_same_class(const selbn_graph* a, const selbn_graph* b, int* same) {
  return guarded([&] {
    require_ptr(a, "graph a");
    require_ptr(b, "graph b");
    require_ptr(same, "same");
    *same = cpdag_of_file(a->file) == cpdag_of_file(b->file) ? 1 : 0;
  });
}

selbn_status selbn_enumerate_class(const selbn_graph* g, size_t guard, selbn_format format, char** out) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out, "out");
    check_format(format);
    const auto members =
        selbn::enumerate_class(cpdag_of_file(g->file), guard == 0 ? selbn::kDefaultEnumerationGuard : guard);
    std::string s;
    if (format == SELBN_FORMAT_JSON) {
      json arr = json::array();
      for (const auto& m : members) arr.push_back(selbn::to_json(g->file.with_graph(m)));
      s = json{{"class_size", members.size()}, {"members", arr}}.dump();
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto f = g->file.with_graph(members[i]);
        if (format == SELBN_FORMAT_DOT) {
          s += selbn::to_dot(f, "G" + std::to_string(i));
        } else {
          s += "# member " + std::to_string(i + 1) + " of " + std::to_string(members.size()) + "\n" + selbn::to_text(f);
        }
      }
    }
    *out = dup(s);
  });
}

selbn_status selbn_compelled_ancestors(const selbn_graph* g, const char* targets, int check_oracle, char** out_json) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out_json, "out");
    const selbn::Cpdag cp = cpdag_of_file(g->file);
    const selbn::NodeSet t = parse_targets(targets, cp.pdag());
    const selbn::CompelledResult r = selbn::compelled_ancestors(cp, t);
    json j = {{"A", r.ancestors_in_cpdag}, {"U", r.interior_nodes}, {"compelled", r.compelled}};
    if (check_oracle) {
      const selbn::NodeSet oracle =
          selbn::compelled_ancestors_bruteforce(selbn::consistent_extension(cp.pdag()), t);
      j["oracle"] = oracle;
      j["oracle_match"] = oracle == r.compelled;
    }
    *out_json = dup(j.dump());
  });
}

selbn_status selbn_min_ancestor_dag(const selbn_graph* g, const char* targets, selbn_format format, char** out) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out, "out");
    check_format(format);
    const selbn::Cpdag cp = cpdag_of_file(g->file);
    const selbn::Dag d = selbn::min_ancestor_dag(cp, parse_targets(targets, cp.pdag()));
    *out = dup(render(g->file.with_graph(d), format));
  });
}

selbn_status selbn_reduce(const selbn_graph* g, int use_compelled, selbn_format format, char** out) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out, "out");
    check_format(format);
    const selbn::GraphFile& f = g->file;
    const selbn::ReductionReport r = selbn::reduce_full(f.selection_problem(), use_compelled != 0);
    if (format == SELBN_FORMAT_JSON) {
      json steps = json::array();
      for (const auto& s : r.steps)
        steps.push_back({{"rule", s.rule},
                         {"before", selbn::to_json(f.with_graph(s.before))},
                         {"after", selbn::to_json(f.with_graph(s.after))},
                         {"dropped", s.dropped},
                         {"retained", s.retained}});
      json j = {{"steps", steps},
                {"final", selbn::to_json(f.with_graph(r.final_problem.graph))},
                {"conditional_part", selbn::to_json(f.with_graph(r.conditional_part))}};
      j["conditioning_target"] = r.conditioning_target ? json(*r.conditioning_target) : json(nullptr);
      *out = dup(j.dump());
      return;
    }
    if (format == SELBN_FORMAT_DOT) {
      *out = dup(selbn::to_dot(f.with_graph(r.final_problem.graph), "core") +
                 selbn::to_dot(f.with_graph(r.conditional_part), "conditional_part"));
      return;
    }
    std::ostringstream s;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& step = r.steps[i];
      s << "step " << i + 1 << ": " << step.rule << "\n  dropped: " << join(step.dropped)
        << "\n  retained: " << join(step.retained) << "\n";
    }
    s << "# core\n" << selbn::to_text(f.with_graph(r.final_problem.graph));
    s << "# conditional part\n" << selbn::to_text(f.with_graph(r.conditional_part));
    if (r.conditioning_target) s << "# conditioning target: " << join(*r.conditioning_target) << "\n";
    *out = dup(s.str());
  });
}

selbn_status selbn_shm(const selbn_graph* g, const char* cpt_json, double tol, char** out_json) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(out_json, "out");
    const selbn::SelectionProblem sp = g->file.selection_problem();
    const selbn::HierarchicalSpec spec = selbn::shm_of(sp);
    json vars = json::array();
    for (const auto& v : spec.variables) vars.push_back(v.name);
    json j = {{"variables", vars}, {"generators", spec.generators}};
    if (cpt_json) {
      const double t = tol > 0 ? tol : selbn::kDefaultShmTolerance;
      const selbn::CategoricalBn bn =
          selbn::parse_cpts(json::parse(cpt_json), selbn::ConditionalDag(sp.graph, {}), sp.cards);
      const selbn::JointTable p = selbn::condition(selbn::joint_of(bn), {}, sp.values).as_joint();
      const selbn::IpfResult fit = selbn::ipf_fit(p, spec);
      j["fit"] = {{"kl", fit.kl},
                  {"iterations", fit.iterations},
                  {"max_margin_error", fit.max_margin_error},
                  {"tolerance", t},
                  {"member", fit.kl <= t}};
    }
    *out_json = dup(j.dump());
  });
}

selbn_status selbn_verify(const selbn_graph* g, const char* law, size_t trials, uint64_t seed, double tol,
                          double floor, int* passed, char** out_json) {
  return guarded([&] {
    require_ptr(g, "graph");
    require_ptr(law, "law");
    require_ptr(passed, "passed");
    require_ptr(out_json, "out");
    const auto l = selbn::parse_law(law);
    if (!l) selbn::fail(ErrorCode::kInvalidArgument, "unknown law '" + std::string(law) + "'");
    const selbn::VerifyReport r = selbn::verify_law(*l, g->file.selection_problem(), trials, seed,
                                                    tol > 0 ? std::optional<double>(tol) : std::nullopt,
                                                    floor > 0 ? floor : selbn::kDefaultFloor);
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"trials", c.trials},
                        {"failures", c.failures},
                        {"max_error", c.max_error},
                        {"tolerance", c.tolerance}});
    *passed = r.passed() ? 1 : 0;
    *out_json = dup(json{{"law", selbn::law_name(r.law)}, {"seed", seed}, {"passed", r.passed()}, {"checks", checks}}.dump());
  });
}

selbn_status selbn_constraint_check(const char* q_json, double tol, char** out_json) {
  return guarded([&] {
    require_ptr(q_json, "q");
    require_ptr(out_json, "out");
    const double t = tol > 0 ? tol : selbn::kDefaultConstraintTolerance;
    const selbn::ClassificationReport r = selbn::classify_conditional(selbn::parse_cond_table(json::parse(q_json)), t);
    json roots = json::array();
    for (const auto& root : r.verdict.roots) roots.push_back({root[0], root[1]});
    json j = {{"consistent", r.verdict.consistent},
              {"roots", roots},
              {"resultant", r.verdict.resultant_value},
              {"tolerance", r.verdict.tolerance_used},
              {"marginal", r.verdict.marginal},
              {"identically_zero", r.verdict.identically_zero},
              {"ci_in_every_slice", r.ci_in_every_slice}};
    j["saturated_kl"] = r.saturated_kl ? json(*r.saturated_kl) : json(nullptr);
    j["shm_kl"] = r.shm_kl ? json(*r.shm_kl) : json(nullptr);
    *out_json = dup(j.dump());
  });
}

selbn_status selbn_constraint_demo(size_t trials, uint64_t seed, double tol, char** out_json) {
  return guarded([&] {
    require_ptr(out_json, "out");
    const selbn::DemoSummary d =
        selbn::constraint_demo(trials, seed, tol > 0 ? tol : selbn::kDefaultConstraintTolerance);
    auto row = [](const selbn::DemoRow& r) {
      return json{{"trials", r.trials},
                  {"consistent", r.consistent},
                  {"recovered", r.recovered},
                  {"resultant_small", r.resultant_small},
                  {"resultant_large", r.resultant_large},
                  {"max_abs_resultant", r.max_abs_resultant},
                  {"max_roots", r.max_roots}};
    };
    *out_json = dup(json{{"seed", seed}, {"forward", row(d.forward)}, {"generic", row(d.generic)}}.dump());
  });
}

}  // extern "C"
