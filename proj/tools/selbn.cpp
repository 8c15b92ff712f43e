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

// selbn command-line tool. Every subcommand is a thin layer over the C API.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selbn/selbn.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Carries a failed C API call out to main.
struct ApiFailure {
  selbn_status status;
  std::string message;
};

void check(selbn_status s) {
  if (s != SELBN_OK) throw ApiFailure{s, selbn_last_error()};
}

struct Text {
  char* p = nullptr;
  ~Text() { selbn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using GraphPtr = std::unique_ptr<selbn_graph, decltype(&selbn_graph_free)>;

// --graph accepts a path or fixture:NAME.
GraphPtr open_graph(const std::string& spec) {
  selbn_graph* g = nullptr;
  const std::string prefix = "fixture:";
  if (spec.rfind(prefix, 0) == 0)
    check(selbn_graph_fixture(spec.substr(prefix.size()).c_str(), &g));
  else
    check(selbn_graph_load(spec.c_str(), &g));
  return GraphPtr(g, selbn_graph_free);
}

// Inline JSON when the argument starts with '{', otherwise a file path.
std::string json_arg(const std::string& arg) {
  const auto b = arg.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && arg[b] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ApiFailure{SELBN_ERR_INVALID_ARGUMENT, "cannot open '" + arg + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

selbn_format format_of(const std::string& f) {
  if (f == "json") return SELBN_FORMAT_JSON;
  if (f == "dot") return SELBN_FORMAT_DOT;
  return SELBN_FORMAT_TEXT;
}

void emit(const std::string& s) {
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

std::string words(const json& arr) {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : " ") + v.get<std::string>();
  return out.empty() ? "(none)" : out;
}

std::string set_text(const json& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v.get<std::string>();
  return out + "}";
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

struct Options {
  std::string graph;
  std::string other;
  std::string format = "text";
  std::string targets;
  std::string law;
  std::string q;
  std::string cpts;
  std::string name;
  bool check_oracle = false;
  bool compelled = false;
  std::size_t trials = 100;
  std::size_t guard = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double floor = 0.0;
};

int run_cpdag(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_cpdag(g.get(), format_of(o.format), &out.p));
  emit(out.str());
  return kExitOk;
}

int run_same_class(const Options& o) {
  auto a = open_graph(o.graph);
  auto b = open_graph(o.other);
  int same = 0;
  check(selbn_same_class(a.get(), b.get(), &same));
  if (o.format == "json")
    emit(json{{"same_class", same != 0}}.dump());
  else
    emit(same ? "same class" : "different classes");
  return same ? kExitOk : kExitFailed;
}

int run_enumerate(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_enumerate_class(g.get(), o.guard, format_of(o.format), &out.p));
  emit(out.str());
  return kExitOk;
}

int run_compelled(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_compelled_ancestors(g.get(), o.targets.c_str(), o.check_oracle ? 1 : 0, &out.p));
  const json j = json::parse(out.str());
  const bool ok = !j.contains("oracle_match") || j["oracle_match"].get<bool>();
  if (o.format == "json") {
    emit(j.dump());
    return ok ? kExitOk : kExitFailed;
  }
  json proper = json::array();
  std::vector<std::string> targets;
  std::stringstream ss(o.targets);
  for (std::string t; std::getline(ss, t, ',');) {
    const auto b = t.find_first_not_of(" \t");
    if (b != std::string::npos) targets.push_back(t.substr(b, t.find_last_not_of(" \t") - b + 1));
  }
  for (const auto& v : j["compelled"])
    if (std::find(targets.begin(), targets.end(), v.get<std::string>()) == targets.end()) proper.push_back(v);
  std::ostringstream s;
  s << "A: " << words(j["A"]) << "\nU: " << words(j["U"]) << "\ncompelled: " << words(j["compelled"])
    << "\nproper compelled ancestors: " << words(proper) << "\n";
  if (j.contains("oracle"))
    s << "oracle: " << words(j["oracle"]) << (ok ? " (match)" : " (MISMATCH)") << "\n";
  emit(s.str());
  return ok ? kExitOk : kExitFailed;
}

int run_min_ancestor_dag(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_min_ancestor_dag(g.get(), o.targets.c_str(), format_of(o.format), &out.p));
  emit(out.str());
  return kExitOk;
}

int run_reduce(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_reduce(g.get(), o.compelled ? 1 : 0, format_of(o.format), &out.p));
  emit(out.str());
  return kExitOk;
}

int run_shm(const Options& o) {
  auto g = open_graph(o.graph);
  const std::string cpts = o.cpts.empty() ? std::string() : json_arg(o.cpts);
  Text out;
  check(selbn_shm(g.get(), o.cpts.empty() ? nullptr : cpts.c_str(), o.tol, &out.p));
  const json j = json::parse(out.str());
  const bool ok = !j.contains("fit") || j["fit"]["member"].get<bool>();
  if (o.format == "json") {
    emit(j.dump());
    return ok ? kExitOk : kExitFailed;
  }
  std::ostringstream s;
  s << "generators:";
  for (const auto& gen : j["generators"]) s << " " << set_text(gen);
  s << "\n";
  if (j.contains("fit")) {
    const auto& f = j["fit"];
    s << "kl: " << num(f["kl"].get<double>()) << " (tol " << num(f["tolerance"].get<double>()) << ")\n"
      << "iterations: " << f["iterations"].get<std::size_t>() << "\n"
      << "member: " << (f["member"].get<bool>() ? "yes" : "no") << "\n";
  }
  emit(s.str());
  return ok ? kExitOk : kExitFailed;
}

int run_verify(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  int passed = 0;
  check(selbn_verify(g.get(), o.law.c_str(), o.trials, o.seed, o.tol, o.floor, &passed, &out.p));
  const json j = json::parse(out.str());
  if (o.format == "json") {
    emit(j.dump());
  } else {
    std::ostringstream s;
    for (const auto& c : j["checks"]) {
      const std::size_t failures = c["failures"].get<std::size_t>();
      s << j["law"].get<std::string>() << " " << c["name"].get<std::string>() << ": "
        << (failures == 0 ? "PASS" : "FAIL") << " (" << c["trials"].get<std::size_t>() << " trials, " << failures
        << " failures, max error "
        << (c["max_error"].is_null() ? std::string("inf") : num(c["max_error"].get<double>())) << ", tol "
        << num(c["tolerance"].get<double>()) << ")\n";
    }
    emit(s.str());
  }
  return passed ? kExitOk : kExitFailed;
}

int run_constraint_check(const Options& o) {
  const std::string q = json_arg(o.q);
  Text out;
  check(selbn_constraint_check(q.c_str(), o.tol, &out.p));
  const json j = json::parse(out.str());
  const int code = j["consistent"].get<bool>() ? kExitOk : kExitFailed;
  if (o.format == "json") {
    emit(j.dump());
    return code;
  }
  std::ostringstream s;
  s << "consistent: " << (j["consistent"].get<bool>() ? "yes" : "no") << "\n"
    << "resultant: " << num(j["resultant"].get<double>()) << " (tol " << num(j["tolerance"].get<double>())
    << (j["marginal"].get<bool>() ? ", marginal" : "") << ")\n";
  if (j["identically_zero"].get<bool>()) s << "system identically zero\n";
  for (const auto& r : j["roots"]) s << "root: r1=" << num(r[0].get<double>()) << " r2=" << num(r[1].get<double>()) << "\n";
  for (const auto& ci : j["ci_in_every_slice"]) s << "ci in every slice: " << ci.get<std::string>() << "\n";
  if (!j["saturated_kl"].is_null()) s << "saturated kl: " << num(j["saturated_kl"].get<double>()) << "\n";
  if (!j["shm_kl"].is_null()) s << "shm kl: " << num(j["shm_kl"].get<double>()) << "\n";
  emit(s.str());
  return code;
}

int run_constraint_demo(const Options& o) {
  Text out;
  check(selbn_constraint_demo(o.trials, o.seed, o.tol, &out.p));
  const json j = json::parse(out.str());
  if (o.format == "json") {
    emit(j.dump());
    return kExitOk;
  }
  std::ostringstream s;
  s << "source     trials  consistent  recovered  |res|<=tol  |res|>1e-4  max|res|      max roots\n";
  for (const char* row : {"forward", "generic"}) {
    const auto& r = j[row];
    char line[160];
    std::snprintf(line, sizeof line, "%-9s  %6zu  %10zu  %9zu  %10zu  %10zu  %-12.4g  %9zu\n", row,
                  r["trials"].get<std::size_t>(), r["consistent"].get<std::size_t>(),
                  r["recovered"].get<std::size_t>(), r["resultant_small"].get<std::size_t>(),
                  r["resultant_large"].get<std::size_t>(), r["max_abs_resultant"].get<double>(),
                  r["max_roots"].get<std::size_t>());
    s << line;
  }
  emit(s.str());
  return kExitOk;
}

int run_export_dot(const Options& o) {
  auto g = open_graph(o.graph);
  Text out;
  check(selbn_graph_render(g.get(), SELBN_FORMAT_DOT, &out.p));
  emit(out.str());
  return kExitOk;
}

int run_fixture(const Options& o) {
  Text out;
  if (o.name.empty())
    check(selbn_fixture_names(&out.p));
  else
    check(selbn_fixture_text(o.name.c_str(), &out.p));
  emit(out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian networks under selection: equivalence classes, compelled ancestors, reductions and checks."};
  app.set_version_flag("--version", selbn_version());
  app.require_subcommand(1, 1);

  Options o;
  int (*action)(const Options&) = nullptr;
  const std::vector<std::string> graph_formats{"text", "json", "dot"};
  const std::vector<std::string> json_formats{"text", "json"};

  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto graph_opt = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "graph file, or fixture:NAME")->required();
  };
  auto format_opt = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  auto* cpdag = add("cpdag", "CPDAG of the graph's Markov equivalence class", run_cpdag);
  graph_opt(cpdag);
  format_opt(cpdag, graph_formats);

  auto* same = add("same-class", "exit 0 iff two graphs are Markov equivalent", run_same_class);
  graph_opt(same);
  same->add_option("--other", o.other, "second graph file, or fixture:NAME")->required();
  format_opt(same, json_formats);

  auto* en = add("enumerate", "list every DAG in the equivalence class", run_enumerate);
  graph_opt(en);
  en->add_option("--guard", o.guard, "maximum number of undirected CPDAG edges (0 = default)");
  format_opt(en, graph_formats);

  auto* comp = add("compelled-ancestors", "ancestors of the targets shared by every DAG in the class", run_compelled);
  graph_opt(comp);
  comp->add_option("--targets", o.targets, "comma-separated target nodes")->required();
  comp->add_flag("--check-oracle", o.check_oracle, "cross-check against brute-force enumeration");
  format_opt(comp, json_formats);

  auto* mad = add("min-ancestor-dag", "a class member with the fewest ancestors of the targets", run_min_ancestor_dag);
  graph_opt(mad);
  mad->add_option("--targets", o.targets, "comma-separated target nodes")->required();
  format_opt(mad, graph_formats);

  auto* red = add("reduce", "reduce a selection problem to its core", run_reduce);
  graph_opt(red);
  red->add_flag("--compelled", o.compelled, "restrict to compelled ancestors of the selection nodes first");
  red->add_option("--format", o.format, "output format (default json)")->check(CLI::IsMember(graph_formats));

  auto* shm = add("shm", "selection hierarchical model of the graph", run_shm);
  graph_opt(shm);
  shm->add_option("--cpts", o.cpts, "CPT JSON (file or inline) to fit against the model");
  shm->add_option("--tol", o.tol, "KL tolerance for membership");
  format_opt(shm, json_formats);

  auto* ver = add("verify", "randomised check of a reduction law", run_verify);
  graph_opt(ver);
  ver->add_option("--law", o.law, "law to check")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma3", "lemma4", "thm1", "thm7", "shm", "lauritzen"}));
  ver->add_option("--trials", o.trials, "number of random models")->capture_default_str();
  ver->add_option("--seed", o.seed, "random seed")->capture_default_str();
  ver->add_option("--tol", o.tol, "tolerance (default depends on the law)");
  ver->add_option("--floor", o.floor, "smallest CPT entry of the random models");
  format_opt(ver, json_formats);

  auto* cc = add("constraint-check", "test a table q(O1,O2,O3|O4) against the selection constraint",
                 run_constraint_check);
  cc->add_option("--q", o.q, "conditional table JSON (file or inline)")->required();
  cc->add_option("--tol", o.tol, "resultant tolerance");
  format_opt(cc, json_formats);

  auto* cd = add("constraint-demo", "forward-simulated vs generic tables", run_constraint_demo);
  cd->add_option("--trials", o.trials, "trials per row");
  cd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cd->add_option("--tol", o.tol, "resultant tolerance");
  format_opt(cd, json_formats);

  auto* dot = add("export-dot", "render a graph file as DOT", run_export_dot);
  graph_opt(dot);

  auto* fx = add("fixture", "list bundled fixtures, or print one", run_fixture);
  fx->add_option("name", o.name, "fixture name");

  // Subcommand-specific defaults that differ from the shared ones.
  red->preparse_callback([&](std::size_t) { o.format = "json"; });
  cd->preparse_callback([&](std::size_t) { o.trials = 200; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action(o);
  } catch (const ApiFailure& f) {
    std::cerr << "selbn: " << selbn_status_string(f.status) << ": " << f.message << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "selbn: " << e.what() << "\n";
    return kExitUsage;
  }
}
