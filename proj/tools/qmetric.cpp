// Copyright 2026 The qmetric Authors
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

// qmetric: metrics between state files, property campaigns, counterexample
// searches and geometric entanglement. Reports are JSON lines on stdout.
//
// Exit codes: 0 expectation met, 1 expectation violated, 2 input or usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmetric/campaigns.hpp"
#include "qmetric/convexity_lab.hpp"
#include "qmetric/entanglement.hpp"
#include "qmetric/error.hpp"
#include "qmetric/json_io.hpp"
#include "qmetric/metrics_closed.hpp"
#include "qmetric/metrics_sup.hpp"

#ifndef QMETRIC_VERSION
#define QMETRIC_VERSION "unknown"
#endif

namespace {

using qmetric::io::json;

constexpr int kExitMet = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  bool csv = false;
};

class Report {
 public:
  Report(std::string command, const Globals& g)
      : command_(std::move(command)), globals_(g), start_(std::chrono::steady_clock::now()) {}

  json& inputs() { return inputs_; }
  json& outputs() { return outputs_; }
  // CSV rows, emitted instead of the JSON line under --csv.
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void set_header(std::vector<std::string> header) { header_ = std::move(header); }

  void emit() const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (globals_.csv) {
      std::cout << join(header_) << '\n';
      for (const auto& r : rows_) std::cout << join(r) << '\n';
      return;
    }
    json j = {{"command", command_}, {"inputs", inputs_},     {"outputs", outputs_},
              {"seed", globals_.seed}, {"wall_time", wall}, {"version", QMETRIC_VERSION}};
    std::cout << j.dump() << '\n';
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    return out;
  }

  std::string command_;
  Globals globals_;
  std::chrono::steady_clock::time_point start_;
  json inputs_ = json::object();
  json outputs_ = json::object();
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string num(double x) {
  return json(x).dump();
}

bool is_contractive_p(double p) { return p == 1.0 || p == 2.0; }

// ---------------------------------------------------------------- metric

struct MetricArgs {
  std::string state_a;
  std::string state_b;
  std::string metric = "trace";
  std::optional<double> p;
  int restarts = 0;
};

int cmd_metric(const MetricArgs& a, const Globals& g) {
  Report report("metric", g);
  const auto rho = qmetric::io::state_from_json(qmetric::io::read_json_file(a.state_a));
  const auto sigma = qmetric::io::state_from_json(qmetric::io::read_json_file(a.state_b));
  const auto metric = qmetric::MetricId::parse(a.metric, a.p);
  report.inputs() = {{"state_a", a.state_a}, {"state_b", a.state_b},
                     {"metric", qmetric::io::metric_to_json(metric)}};
  report.set_header({"metric", "p", "value"});
  const std::string p_cell = metric.p() ? num(*metric.p()) : "";
  if (metric.family() == qmetric::MetricFamily::kMeasured) {
    const int restarts = a.restarts > 0 ? a.restarts : qmetric::default_dp_restarts(rho.dim());
    qmetric::DpOptions options;
    options.jobs = g.jobs;
    const auto result = qmetric::dp_supremum(rho, sigma, *metric.p(), restarts, g.seed, options);
    report.inputs()["restarts"] = restarts;
    report.outputs() = {{"value", result.value},
                        {"converged", result.converged},
                        {"restarts_used", result.restarts_used},
                        {"family", qmetric::io::family_to_json(result.family)}};
    report.add_row({metric.name(), p_cell, num(result.value)});
  } else {
    const double value = qmetric::evaluate_closed(metric, rho, sigma);
    report.outputs() = {{"value", value}};
    report.add_row({metric.name(), p_cell, num(value)});
  }
  report.emit();
  return kExitMet;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string theorem;
  std::optional<int> trials;
  std::vector<double> ps;
  std::optional<double> q;
  std::vector<int> dims = {2, 3};
  int restarts = 0;
  int grid = 99;
  bool expect_violation = false;
};

int default_trials(const std::string& theorem) {
  static const std::map<std::string, int> table = {
      {"t1", 200}, {"t2", 200}, {"t3", 200}, {"t4", 500},
      {"eq8", 100000}, {"hessian", 0}, {"afid", 500}, {"nielsen", 1000}};
  return table.at(theorem);
}

json campaign_json(const qmetric::CampaignReport& c, const json& parameters) {
  // Worst gap per trial index, in trial order.
  json worst = json::array();
  json checks = json::object();
  std::int64_t current = -1;
  for (const auto& t : c.trials) {
    if (t.trial != current) {
      worst.push_back(t.gap);
      current = t.trial;
    } else if (t.gap > worst.back().get<double>()) {
      worst.back() = t.gap;
    }
    auto& entry = checks[t.check];
    if (entry.is_null()) entry = {{"worst_gap", t.gap}, {"violations", 0}};
    if (t.gap > entry["worst_gap"].get<double>()) entry["worst_gap"] = t.gap;
    if (t.violated) entry["violations"] = entry["violations"].get<int>() + 1;
  }
  json j = {{"campaign", c.name},
            {"parameters", parameters},
            {"tolerance", c.tolerance},
            {"trials", worst.size()},
            {"violations", c.violations()},
            {"worst_gap", c.worst_gap()},
            {"checks", checks},
            {"per_trial_worst_gap", worst}};
  if (c.witness) j["witness"] = qmetric::io::witness_to_json(*c.witness);
  return j;
}

int cmd_verify(const VerifyArgs& a, const Globals& g) {
  Report report("verify", g);
  qmetric::CampaignOptions options;
  options.trials = a.trials.value_or(default_trials(a.theorem));
  options.seed = g.seed;
  options.jobs = g.jobs;
  options.dp_restarts = a.restarts;
  options.dims.assign(a.dims.begin(), a.dims.end());

  std::vector<std::pair<json, qmetric::CampaignReport>> runs;
  auto ps_or = [&](std::vector<double> fallback) { return a.ps.empty() ? fallback : a.ps; };
  if (a.theorem == "t1") {
    for (double p : ps_or({1.0, 1.5, 2.0, 3.0})) {
      runs.emplace_back(json{{"metric", "dp"}, {"p", p}}, qmetric::verify_contractivity(p, options));
    }
  } else if (a.theorem == "t2") {
    for (double p : ps_or({1.0, 2.0})) {
      for (const auto& m : {qmetric::MetricId::brother(p), qmetric::MetricId::measured(p)}) {
        runs.emplace_back(qmetric::io::metric_to_json(m), qmetric::verify_joint_convexity(m, options));
      }
    }
  } else if (a.theorem == "t3") {
    for (double p : ps_or({1.0, 1.5, 2.0, 3.0})) {
      runs.emplace_back(json{{"metric", "Dp"}, {"p", p}}, qmetric::verify_metric_axioms(p, options));
    }
  } else if (a.theorem == "t4") {
    std::vector<std::pair<double, double>> pairs = {{1, 2}, {1, 3}, {2, 3}, {1.5, 2.5}};
    if (!a.ps.empty() || a.q) {
      if (a.ps.empty() || !a.q) throw qmetric::DomainError("verify t4: give both --p and --q");
      pairs.clear();
      for (double p : a.ps) pairs.emplace_back(p, *a.q);
    }
    json pj = json::array();
    for (const auto& [p, q] : pairs) pj.push_back({p, q});
    runs.emplace_back(json{{"pairs", pj}}, qmetric::verify_majorization(pairs, options));
  } else if (a.theorem == "eq8") {
    for (double p : ps_or({1.0, 2.0})) {
      runs.emplace_back(json{{"p", p}}, qmetric::verify_eq8(p, options));
    }
  } else if (a.theorem == "hessian") {
    runs.emplace_back(json{{"grid", a.grid}}, qmetric::verify_hessian(a.grid));
  } else if (a.theorem == "afid") {
    runs.emplace_back(json::object(), qmetric::verify_a_fidelity(options));
  } else if (a.theorem == "nielsen") {
    runs.emplace_back(json::object(), qmetric::verify_nielsen(options));
  }

  report.inputs() = {{"theorem", a.theorem},     {"trials", options.trials},
                     {"dims", a.dims},           {"restarts", a.restarts},
                     {"expect_violation", a.expect_violation}};
  if (!a.ps.empty()) report.inputs()["p"] = a.ps;
  if (a.q) report.inputs()["q"] = *a.q;
  report.set_header({"campaign", "parameters", "trial", "check", "gap", "violated"});
  bool met = true;
  json campaigns = json::array();
  for (const auto& [params, c] : runs) {
    campaigns.push_back(campaign_json(c, params));
    met = met && (a.expect_violation ? !c.clean() : c.clean());
    const std::string pcell = '"' + params.dump() + '"';
    for (const auto& t : c.trials) {
      std::string quoted = pcell;
      for (std::size_t i = 1; i + 1 < quoted.size(); ++i) {
        if (quoted[i] == '"') quoted.insert(i++, 1, '"');
      }
      report.add_row({c.name, quoted, std::to_string(t.trial), t.check, num(t.gap),
                      t.violated ? "1" : "0"});
    }
  }
  report.outputs() = {{"campaigns", campaigns}, {"expectation_met", met}};
  report.emit();
  return met ? kExitMet : kExitViolated;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string target;
  double p = 3.0;
  std::string metric = "Dp";
  std::string direction = "increase";
  std::optional<int> trials;
  std::string out;
};

int cmd_search(const SearchArgs& a, const Globals& g) {
  Report report("search", g);
  const int trials = a.trials.value_or(10000);
  qmetric::LabOptions lab;
  lab.jobs = g.jobs;
  lab.dp_seed = g.seed;
  const bool expected = !is_contractive_p(a.p);
  report.inputs() = {{"target", a.target}, {"p", a.p}, {"trials", trials}};
  report.set_header({"target", "direction", "found", "trial", "gap", "recomputed_gap"});

  std::vector<std::pair<std::string, std::optional<qmetric::Witness>>> found;
  if (a.target == "convexity") {
    const auto metric = qmetric::MetricId::parse(a.metric, a.p);
    report.inputs()["metric"] = qmetric::io::metric_to_json(metric);
    found.emplace_back("convexity", qmetric::find_convexity_violation(metric, trials, g.seed, lab));
  } else {
    report.inputs()["direction"] = a.direction;
    if (a.direction == "increase" || a.direction == "both") {
      found.emplace_back("increase", qmetric::find_contractivity_violation(
                                         a.p, trials, g.seed, qmetric::SearchDirection::kIncrease, lab));
    }
    if (a.direction == "decrease" || a.direction == "both") {
      found.emplace_back("decrease", qmetric::find_contractivity_violation(
                                         a.p, trials, g.seed, qmetric::SearchDirection::kDecrease, lab));
    }
  }

  bool met = true;
  json results = json::array();
  json witnesses = json::array();
  for (const auto& [label, w] : found) {
    json r = {{"direction", label}, {"found", w.has_value()}};
    met = met && (w.has_value() == expected);
    if (w) {
      const double again = qmetric::recompute_gap(*w, lab);
      r["trial"] = w->trial;
      r["gap"] = w->gap;
      r["recomputed_gap"] = again;
      witnesses.push_back(qmetric::io::witness_to_json(*w));
      report.add_row({a.target, label, "1", std::to_string(w->trial), num(w->gap), num(again)});
    } else {
      report.add_row({a.target, label, "0", "", "", ""});
    }
    results.push_back(r);
  }
  if (!a.out.empty() && !witnesses.empty()) {
    qmetric::io::write_json_file(a.out, witnesses.size() == 1 ? witnesses[0] : witnesses);
    report.inputs()["out"] = a.out;
  }
  report.outputs() = {{"results", results},
                      {"witnesses", witnesses},
                      {"expected_witness", expected},
                      {"expectation_met", met}};
  report.emit();
  return met ? kExitMet : kExitViolated;
}

// ---------------------------------------------------------------- entanglement

struct EntanglementArgs {
  std::string state;
  std::string metric = "bures";
  std::optional<double> p;
  int restarts = qmetric::kDefaultEntanglementRestarts;
  std::string out;
};

int cmd_entanglement(const EntanglementArgs& a, const Globals& g) {
  Report report("entanglement", g);
  const auto rho = qmetric::io::state_from_json(qmetric::io::read_json_file(a.state));
  if (rho.dim() != 4) throw qmetric::DomainError("entanglement: expected a 2 (x) 2 state of dimension 4");
  const auto metric = qmetric::MetricId::parse(a.metric, a.p);
  qmetric::EntanglementOptions options;
  options.jobs = g.jobs;
  const auto result = qmetric::geometric_entanglement(rho, metric, a.restarts, g.seed, options);
  const auto closest = result.closest.assemble();
  const bool ppt = qmetric::ppt_check(closest, {2, 2});
  report.inputs() = {{"state", a.state},
                     {"metric", qmetric::io::metric_to_json(metric)},
                     {"restarts", a.restarts}};
  json out = qmetric::io::entanglement_to_json(result);
  out["closest_ppt"] = ppt;
  if (!a.out.empty()) {
    qmetric::io::write_json_file(a.out, out);
    report.inputs()["out"] = a.out;
  }
  report.outputs() = out;
  report.set_header({"metric", "value", "converged", "closest_ppt"});
  report.add_row({metric.name(), num(result.value), result.converged ? "1" : "0", ppt ? "1" : "0"});
  report.emit();
  return kExitMet;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum state metrics: evaluation, property campaigns and counterexample search"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", QMETRIC_VERSION);

  Globals g;
  app.add_option("--seed", g.seed, "Random seed (default 0)");
  app.add_option("--jobs", g.jobs, "Worker threads")->envname("QMETRIC_JOBS")->check(CLI::PositiveNumber);
  app.add_flag("--csv", g.csv, "Emit CSV instead of JSON lines");

  MetricArgs ma;
  auto* metric = app.add_subcommand("metric", "Distance or fidelity between two state files");
  metric->add_option("state_a", ma.state_a)->required()->check(CLI::ExistingFile);
  metric->add_option("state_b", ma.state_b)->required()->check(CLI::ExistingFile);
  metric->add_option("--metric", ma.metric, "trace|bures|fidelity|a_fidelity|Dp|dp");
  metric->add_option("--p", ma.p, "Exponent for Dp and dp");
  metric->add_option("--restarts", ma.restarts, "Random restarts for dp (0 = default)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a property campaign");
  verify->add_option("theorem", va.theorem)
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "eq8", "hessian", "afid", "nielsen"}));
  verify->add_option("--trials", va.trials, "Number of random trials");
  verify->add_option("--p", va.ps, "Exponent(s); repeat or comma-separate")->delimiter(',');
  verify->add_option("--q", va.q, "Larger exponent for t4");
  verify->add_option("--dims", va.dims, "Dimensions to cycle through")->delimiter(',');
  verify->add_option("--restarts", va.restarts, "Random restarts for dp (0 = default)");
  verify->add_option("--grid", va.grid, "Interior grid size for hessian");
  verify->add_flag("--expect-violation", va.expect_violation, "Succeed only if violations are found");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for a counterexample witness");
  search->add_option("target", sa.target)->required()->check(CLI::IsMember({"convexity", "contractivity"}));
  search->add_option("--p", sa.p, "Exponent")->required();
  search->add_option("--metric", sa.metric, "Dp or dp (convexity only)")->check(CLI::IsMember({"Dp", "dp"}));
  search->add_option("--direction", sa.direction, "increase|decrease|both (contractivity only)")
      ->check(CLI::IsMember({"increase", "decrease", "both"}));
  search->add_option("--trials", sa.trials, "Random trials (default 10000)");
  search->add_option("--out", sa.out, "Witness JSON output path");

  EntanglementArgs ea;
  auto* ent = app.add_subcommand("entanglement", "Geometric entanglement of a two-qubit state");
  ent->add_option("state", ea.state)->required()->check(CLI::ExistingFile);
  ent->add_option("--metric", ea.metric, "trace|bures|Dp");
  ent->add_option("--p", ea.p, "Exponent for Dp");
  ent->add_option("--restarts", ea.restarts, "Random restarts")->check(CLI::NonNegativeNumber);
  ent->add_option("--out", ea.out, "Closest-state decomposition JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*metric) return cmd_metric(ma, g);
    if (*verify) return cmd_verify(va, g);
    if (*search) return cmd_search(sa, g);
    if (*ent) return cmd_entanglement(ea, g);
  } catch (const qmetric::ValidationError& e) {
    std::cerr << "qmetric: invalid input (" << e.invariant() << "): " << e.what() << '\n';
    return kExitInput;
  } catch (const qmetric::Error& e) {
    std::cerr << "qmetric: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
