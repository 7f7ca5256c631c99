// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kassoc/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kassoc/association.hpp"
#include "kassoc/error.hpp"
#include "kassoc/growshrink.hpp"
#include "kassoc/orientation.hpp"
#include "kassoc/scenarios.hpp"
#include "kassoc/sparsest_permutation.hpp"

namespace kassoc::cli {
namespace {

using json = nlohmann::json;

struct Options {
  std::string scenario;
  std::string oracle = "exact";
  std::string target;
  std::string center;
  std::string left;
  std::string right;
  std::string mode = "modified";
  std::optional<int> budget;
  double alpha = 0.01;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string out;
  std::string trace;
  std::string data;
  bool iterate = false;
  bool allow_ambiguous = false;
};

json labels_of(const IndependenceOracle& o, NodeSet s) {
  json a = json::array();
  for (NodeIndex v : s) a.push_back(o.label(v));
  return a;
}

json statement_json(const IndependenceOracle& o, const std::optional<CiStatement>& st) {
  if (!st) return nullptr;
  return {{"x", labels_of(o, st->x)},
          {"y", labels_of(o, st->y)},
          {"given", labels_of(o, st->given)},
          {"independent", st->independent},
          {"text", o.format(*st)}};
}

json association_json(const IndependenceOracle& o, const AssociationReport& r) {
  return {{"target", o.label(r.target)},
          {"partners", labels_of(o, r.partners)},
          {"kind", std::string(to_string(r.kind))},
          {"witness", statement_json(o, r.witness)},
          {"one_associated", labels_of(o, r.one_associated)},
          {"exhaustive", r.exhaustive}};
}

json family_json(const IndependenceOracle& o, const DependenceFamily& f) {
  return {{"x", o.label(f.x)},       {"z", o.label(f.z)},         {"base", labels_of(o, f.base)},
          {"holds", f.holds},        {"checked", f.checked},      {"exhaustive", f.exhaustive},
          {"witness", statement_json(o, f.witness)}, {"excludes_center", f.exclude_center}};
}

json verdict_json(const IndependenceOracle& o, const OrientationVerdict& v) {
  json edges = json::array();
  for (const Edge& e : v.oriented) edges.push_back(o.label(e.parent) + "->" + o.label(e.child));
  json ri = json::array(), rii = json::array(), caveats = json::array();
  for (const auto& f : v.rule_i_checks) ri.push_back(family_json(o, f));
  for (const auto& f : v.rule_ii_checks) rii.push_back(family_json(o, f));
  for (const auto& c : v.caveat_pairs) {
    caveats.push_back({{"x", o.label(c.x)}, {"z", o.label(c.z)}, {"evidence", std::string(to_string(c.evidence))}});
  }
  json blocked = nullptr;
  if (v.blocked_pair) blocked = json::array({o.label(v.blocked_pair->first), o.label(v.blocked_pair->second)});
  return {{"outcome", std::string(to_string(v.outcome))},
          {"rule_i", v.rule_i},
          {"rule_ii", v.rule_ii},
          {"oriented", edges},
          {"blocked_pair", blocked},
          {"rule_i_checks", ri},
          {"rule_ii_checks", rii},
          {"caveat", v.caveat},
          {"caveat_pairs", caveats},
          {"of_failure_detected", v.of_failure}};
}

json audit_json(const IndependenceOracle& o, const AuditReport& r) {
  json checks = json::object();
  for (const AssumptionCheck& c : r.checks) {
    json w = nullptr;
    if (c.witness) w = {{"description", c.witness->description}, {"statement", statement_json(o, c.witness->statement)}};
    checks[c.name] = {{"holds", c.holds}, {"checked", c.checked}, {"witness", w}};
  }
  return {{"variables", r.variables}, {"partial", r.partial}, {"checks", checks}};
}

NodeSet parse_label_set(const IndependenceOracle& o, const std::string& csv, const char* flag) {
  if (csv.empty()) throw InputError(std::string("--") + flag + " is required");
  NodeSet s;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InputError(std::string("--") + flag + " has an empty label");
    const NodeIndex v = o.index_of(item);
    if (s.contains(v)) throw InputError(std::string("--") + flag + " repeats " + item);
    s.insert(v);
  }
  return s;
}

NodeIndex parse_label(const IndependenceOracle& o, const std::string& label, const char* flag) {
  if (label.empty()) throw InputError(std::string("--") + flag + " is required");
  return o.index_of(label);
}

IndependenceOracle make_oracle(const Scenario& s, const Options& opt) {
  if (opt.oracle == "exact") return s.oracle();
  if (opt.oracle == "graph") return IndependenceOracle::from_graph(s.dag());
  if (opt.oracle == "gtest") {
    if (!s.joint()) throw UnsupportedBackend("the gtest oracle needs a discrete scenario");
    return IndependenceOracle::from_samples(sample(*s.joint(), opt.samples, opt.seed), GTestConfig{opt.alpha, false});
  }
  throw InputError("unknown --oracle '" + opt.oracle + "' (expected exact, graph or gtest)");
}

AssociationQueryBudget budget_of(const Options& opt) { return AssociationQueryBudget{opt.budget}; }

json run_assoc(const Scenario&, const IndependenceOracle& o, const Options& opt, std::ostream& err) {
  std::optional<NodeIndex> target;
  if (!opt.target.empty()) target = o.index_of(opt.target);
  const AssociationScan scan = scan_associations(o, budget_of(opt), target);
  json pairs = json::array(), triples = json::array(), unfaithful = json::array();
  int positive = 0;
  for (const auto& r : scan.pairs) {
    pairs.push_back(association_json(o, r));
    positive += r.holds();
  }
  int strict = 0;
  for (const auto& r : scan.triples) {
    triples.push_back(association_json(o, r));
    strict += r.kind == AssociationKind::kStrictTwo;
  }
  for (const auto& t : scan.unfaithful) {
    unfaithful.push_back({{"nodes", json::array({o.label(t.nodes[0]), o.label(t.nodes[1]), o.label(t.nodes[2])})},
                          {"minimal", t.minimal},
                          {"witness", statement_json(o, t.minimality_witness)}});
  }
  err << positive << " 1-associations, " << strict << " strict 2-associations, " << scan.unfaithful.size()
      << " unfaithful triples\n";
  json r = {{"one_associations", pairs}, {"two_associations", triples}};
  r["unfaithful_triples"] = o.joint() != nullptr ? unfaithful : json(nullptr);
  return r;
}

json run_orient(const Scenario&, const IndependenceOracle& o, const Options& opt, std::ostream& err) {
  OrientationQuery q;
  q.center = parse_label(o, opt.center, "center");
  q.left = parse_label_set(o, opt.left, "left");
  q.right = parse_label_set(o, opt.right, "right");
  q.budget = budget_of(opt);
  q.allow_ambiguous_shielding = opt.allow_ambiguous;
  json r;
  OrientationVerdict v;
  if (opt.iterate) {
    IterativeOrientation it = orient_iteratively(o, q);
    v = it.verdict;
    json resolved = json::array();
    for (const auto& [a, b] : it.resolved) resolved.push_back(json::array({o.label(a), o.label(b)}));
    r["resolved_pairs"] = resolved;
    r["rounds"] = it.rounds;
  } else {
    v = orient(o, q);
  }
  r["verdict"] = verdict_json(o, v);
  r["query"] = {{"center", o.label(q.center)}, {"left", labels_of(o, q.left)}, {"right", labels_of(o, q.right)}};
  err << "orientation: " << to_string(v.outcome) << (v.of_failure ? " (2-orientation faithfulness failure)" : "")
      << '\n';
  return r;
}

json run_mb(const Scenario& s, const IndependenceOracle& o, const Options& opt, std::ostream& err) {
  const NodeIndex t = parse_label(o, opt.target, "target");
  GsOptions gs;
  gs.mode = parse_gs_mode(opt.mode);
  gs.max_conditioning_size = opt.budget;
  const MarkovBlanketResult res = markov_blanket(o, t, o.variables(), gs);
  const NodeSet truth = graph_markov_blanket(s.dag(), t);
  if (!opt.trace.empty()) {
    json steps = json::array();
    for (const GsStep& st : res.trace) {
      steps.push_back({{"phase", st.phase == GsPhase::kGrow ? "grow" : "shrink"},
                       {"candidate", o.label(st.candidate)},
                       {"partner", st.partner ? json(o.label(*st.partner)) : json(nullptr)},
                       {"given", labels_of(o, st.given)},
                       {"independent", st.independent},
                       {"action", st.changed ? (st.phase == GsPhase::kGrow ? "add" : "remove") : "keep"}});
    }
    std::ofstream f(opt.trace);
    if (!f) throw InputError("cannot write trace file " + opt.trace);
    f << steps.dump(2) << '\n';
  }
  err << "MB(" << o.label(t) << ") = " << o.format(res.blanket) << " [" << to_string(gs.mode) << "]\n";
  return {{"target", o.label(t)},
          {"mode", std::string(to_string(gs.mode))},
          {"blanket", labels_of(o, res.blanket)},
          {"grown", labels_of(o, res.grown)},
          {"graph_blanket", labels_of(o, truth)},
          {"matches_graph", res.blanket == truth},
          {"trace_steps", res.trace.size()}};
}

json run_sp(const Scenario&, const IndependenceOracle& o, const Options&, std::ostream& err) {
  const SparsestResult r = sparsest_permutations(o);
  json mins = json::array();
  for (const PermutationDag& d : r.minimizers) {
    json order = json::array(), edges = json::array();
    for (NodeIndex v : d.order) order.push_back(o.label(v));
    for (const Edge& e : d.edges) edges.push_back(o.label(e.parent) + "->" + o.label(e.child));
    mins.push_back({{"order", order}, {"edges", edges}});
  }
  err << r.minimizers.size() << " sparsest permutations with " << r.min_edges << " edges\n";
  return {{"min_edges", r.min_edges}, {"permutations", r.permutations}, {"minimizers", mins}};
}

json run_audit(const Scenario& s, const IndependenceOracle& o, const Options& opt, std::ostream& err) {
  AuditOptions ao;
  if (opt.budget) ao.partial_budget = *opt.budget;
  const AuditReport r = audit(s.dag(), o, ao);
  for (const AssumptionCheck& c : r.checks) err << c.name << (c.holds ? " ok  " : " FAIL  ");
  err << (r.partial ? "(partial)\n" : "\n");
  return audit_json(o, r);
}

json run_sample(const Scenario& s, const IndependenceOracle&, const Options& opt, std::ostream& err) {
  if (!s.joint()) throw UnsupportedBackend("sampling needs a discrete scenario");
  const Dataset d = sample(*s.joint(), opt.samples, opt.seed);
  json freq = json::object();
  for (int v = 0; v < d.variables(); ++v) {
    json counts = json::array();
    for (int k = 0; k < d.cardinalities[v]; ++k) counts.push_back((d.values.col(v).array() == k).count());
    freq[d.labels[v]] = counts;
  }
  if (!opt.data.empty()) {
    std::ofstream f(opt.data);
    if (!f) throw InputError("cannot write data file " + opt.data);
    for (int v = 0; v < d.variables(); ++v) f << (v ? "," : "") << d.labels[v];
    f << '\n';
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
      for (int v = 0; v < d.variables(); ++v) f << (v ? "," : "") << d.values(r, v);
      f << '\n';
    }
  }
  err << d.rows() << " samples drawn\n";
  return {{"samples", d.rows()}, {"seed", opt.seed}, {"counts", freq}, {"data_file", opt.data.empty() ? json(nullptr) : json(opt.data)}};
}

using Handler = std::function<json(const Scenario&, const IndependenceOracle&, const Options&, std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association-based causal structure analysis on small models", "kassoc"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--scenario", opt.scenario, "builtin:<name> or a scenario JSON file")->required();
    sub->add_option("--oracle", opt.oracle, "exact, graph or gtest");
    sub->add_option("--budget", opt.budget, "maximum conditioning-set size")->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha", opt.alpha, "G-test significance level")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--samples", opt.samples, "sample size for gtest or sample")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--out", opt.out, "write the report here instead of standard output");
  };
  std::map<CLI::App*, Handler> handlers;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = std::move(h);
    return sub;
  };
  add("assoc", "scan 1- and 2-associations and unfaithful triples", run_assoc)
      ->add_option("--target", opt.target, "restrict to one target variable");
  CLI::App* orient_cmd = add("orient", "apply the orientation rule to one triple", run_orient);
  orient_cmd->add_option("--center", opt.center, "center variable")->required();
  orient_cmd->add_option("--left", opt.left, "comma-separated left side (1 or 2 labels)")->required();
  orient_cmd->add_option("--right", opt.right, "comma-separated right side (1 or 2 labels)")->required();
  orient_cmd->add_flag("--iterate", opt.iterate, "resolve ambiguous shielding through inner triples first");
  orient_cmd->add_flag("--allow-ambiguous", opt.allow_ambiguous, "proceed with a caveat on ambiguous adjacency");
  CLI::App* mb_cmd = add("mb", "grow-shrink Markov blanket of one target", run_mb);
  mb_cmd->add_option("--target", opt.target, "target variable")->required();
  mb_cmd->add_option("--mode", opt.mode, "modified or classic");
  mb_cmd->add_option("--trace", opt.trace, "write the query trace (JSON) here");
  add("sp", "sparsest permutation search", run_sp);
  add("audit", "verify modelling assumptions against the ground-truth graph", run_audit);
  add("sample", "draw samples from a discrete scenario", run_sample)
      ->add_option("--data", opt.data, "write the samples as CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    const Scenario scenario = resolve_scenario(opt.scenario);
    const IndependenceOracle oracle = make_oracle(scenario, opt);
    json report;
    report["command"] = sub->get_name();
    report["scenario"] = {{"name", scenario.name()},
                          {"nodes", scenario.labels()},
                          {"payload", std::string(to_string(scenario.type()))},
                          {"params", scenario.params()}};
    report["result"] = handlers.at(sub)(scenario, oracle, opt, err);
    report["oracle"] = {{"backend", std::string(to_string(oracle.backend()))}, {"queries", oracle.query_count()}};
    report[kTimingField] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string text = report.dump(2) + "\n";
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream f(opt.out);
      if (!f) throw InputError("cannot write report file " + opt.out);
      f << text;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const UnsupportedBackend& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace kassoc::cli
