// Copyright 2026 The renyi Authors
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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "renyi/renyi.hpp"

namespace {

using renyi::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

renyi::AlphaOrder parse_alpha(const std::string& token) {
  std::string t = token;
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "inf" || t == "infinity") return renyi::AlphaOrder::infinity();
  double a = 0.0;
  try {
    std::size_t used = 0;
    a = std::stod(t, &used);
    if (used != t.size()) throw UsageError("bad alpha token: " + token);
  } catch (const std::exception&) {
    throw UsageError("bad alpha token: " + token);
  }
  if (a == 1.0) return renyi::AlphaOrder::one();
  if (!(a > 0.0)) throw UsageError("alpha must be positive: " + token);
  if (std::abs(a - 1.0) <= renyi::kAlphaOneGuard)
    throw UsageError("alpha too close to 1; use exactly 1 for the Umegaki limit");
  return renyi::AlphaOrder(a);
}

Json alpha_echo(const renyi::AlphaOrder& a) {
  if (a.is_infinite()) return "inf";
  if (a.is_one()) return 1.0;
  return a.value();
}

double scale_bits(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    renyi::save_json_file(out_path, j);
  }
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("bad --alphas list");
    renyi::AlphaOrder a = parse_alpha(tok);
    values.push_back(a.is_infinite() ? std::numeric_limits<double>::infinity() : a.value());
  }
  if (values.empty()) throw UsageError("bad --alphas list");
  return values;
}

std::vector<int> parse_dims_list(const std::string& csv) {
  std::vector<int> dims;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(tok, &used);
      if (used != tok.size() || d < 2) throw UsageError("bad --dims list");
      dims.push_back(d);
    } catch (const std::exception&) {
      throw UsageError("bad --dims list");
    }
  }
  if (dims.empty()) throw UsageError("bad --dims list");
  return dims;
}

renyi::OptimizerConfig make_config(int restarts, double tol, std::uint64_t seed) {
  renyi::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.tol = tol;
  cfg.seed = seed;
  return cfg;
}

Json optimizer_json(const renyi::OptimizerResult& r, const renyi::AlphaOrder& alpha, bool bits) {
  Json j;
  j["alpha"] = alpha_echo(alpha);
  j["value"] = scale_bits(r.value, bits);
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["best_restart"] = r.best_restart;
  j["boundary"] = r.boundary;
  j["argopt"] = renyi::density_to_json(r.argopt);
  j["diagnostics"] = r.diagnostics;
  return j;
}

// ---------------------------------------------------------------------------

struct ComputeOptions {
  std::string rho_path, sigma_path, channel_path;
  std::string alpha = "2";
  bool bits = false;
  bool dual = false;
  int restarts = 8;
  int k = 2;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
};

int run_compute(const std::string& sub, const ComputeOptions& opt) {
  const renyi::AlphaOrder alpha = parse_alpha(opt.alpha);
  if (sub == "divergence") {
    renyi::DensityMatrix rho = renyi::density_from_json(renyi::load_json_file(opt.rho_path));
    renyi::DensityMatrix sigma = renyi::density_from_json(renyi::load_json_file(opt.sigma_path));
    renyi::DivergenceValue d = renyi::sandwiched_renyi(rho, sigma, alpha);
    Json j;
    j["alpha"] = alpha_echo(alpha);
    j["value"] = scale_bits(d.value, opt.bits);
    j["support_violated"] = d.support_violated;
    emit(j, opt.out);
    return kExitOk;
  }
  if (sub == "entropy") {
    renyi::DensityMatrix rho = renyi::density_from_json(renyi::load_json_file(opt.rho_path));
    Json j;
    j["alpha"] = alpha_echo(alpha);
    j["value"] = scale_bits(renyi::renyi_entropy(rho, alpha), opt.bits);
    emit(j, opt.out);
    return kExitOk;
  }
  if (sub == "conditional-entropy") {
    renyi::DensityMatrix rho = renyi::density_from_json(renyi::load_json_file(opt.rho_path));
    renyi::OptimizerResult r =
        renyi::conditional_renyi_entropy(rho, alpha, make_config(opt.restarts, opt.tol, opt.seed));
    emit(optimizer_json(r, alpha, opt.bits), opt.out);
    return kExitOk;
  }
  if (sub == "mutual-info") {
    renyi::DensityMatrix rho = renyi::density_from_json(renyi::load_json_file(opt.rho_path));
    renyi::OptimizerResult r =
        opt.dual ? renyi::mutual_info_dual(rho, alpha, make_config(opt.restarts, opt.tol, opt.seed))
                 : renyi::mutual_info_primal(rho, alpha, make_config(opt.restarts, opt.tol, opt.seed));
    Json j = optimizer_json(r, alpha, opt.bits);
    j["route"] = opt.dual ? "dual" : "primal";
    emit(j, opt.out);
    return kExitOk;
  }
  if (sub == "holevo") {
    renyi::Channel phi = renyi::channel_from_json(renyi::load_json_file(opt.channel_path));
    renyi::EnsembleResult r =
        renyi::holevo_alpha(phi, opt.k, alpha, make_config(opt.restarts, opt.tol, opt.seed));
    Json j;
    j["alpha"] = alpha_echo(alpha);
    j["value"] = scale_bits(r.value, opt.bits);
    j["lower_bound"] = true;
    j["converged"] = r.converged;
    j["best_restart"] = r.best_restart;
    j["diagnostics"] = r.diagnostics;
    Json ens;
    ens["probs"] = r.argopt.probs;
    Json states = Json::array();
    for (const renyi::Vector& v : r.argopt.states) states.push_back(renyi::matrix_to_json(v));
    ens["states"] = std::move(states);
    j["ensemble"] = std::move(ens);
    emit(j, opt.out);
    return kExitOk;
  }
  throw UsageError("unknown compute subcommand: " + sub);
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string check;
  std::optional<int> trials;
  std::optional<std::string> dims;
  std::optional<std::string> alphas;
  std::uint64_t seed = 42;
  std::string out;
  std::string instances_dir = ".";
  std::string replay;
  bool timing = false;
};

renyi::TrialPlan plan_for(const std::string& check, const VerifyOptions& opt) {
  renyi::TrialPlan plan = renyi::default_plan(check, opt.seed);
  if (opt.trials) plan.trials = *opt.trials;
  if (opt.dims) plan.dims = parse_dims_list(*opt.dims);
  if (opt.alphas) plan.alphas = parse_alpha_list(*opt.alphas);
  return plan;
}

std::vector<std::string> write_instances(const renyi::PropertyReport& rep, const std::string& dir) {
  std::vector<std::string> paths;
  for (const Json& payload : rep.failure_payloads) {
    const std::string path =
        dir + "/" + rep.check + "-fail-" + std::to_string(payload.at("trial").get<int>()) + ".json";
    renyi::save_json_file(path, payload);
    paths.push_back(path);
  }
  return paths;
}

int run_verify(const VerifyOptions& opt) {
  if (!opt.replay.empty()) {
    const Json payload = renyi::load_json_file(opt.replay);
    const std::string check = payload.at("check").get<std::string>();
    renyi::TrialPlan plan = renyi::default_plan(check, payload.at("seed").get<std::uint64_t>());
    if (payload.contains("plan")) {
      const Json& p = payload.at("plan");
      plan.dims = p.at("dims").get<std::vector<int>>();
      plan.alphas = p.at("alphas").get<std::vector<double>>();
      plan.trials = p.at("trials").get<int>();
    }
    plan.only_trial = payload.at("trial").get<int>();
    renyi::PropertyReport rep = renyi::run_check(check, plan);
    std::cerr << "replayed " << check << " trial " << plan.only_trial << " in " << rep.elapsed_s << " s\n";
    emit(renyi::report_to_json(rep, {}, opt.timing), opt.out);
    return rep.failures == 0 ? kExitOk : kExitCheckFailed;
  }
  if (opt.check != "all") {
    renyi::PropertyReport rep = renyi::run_check(opt.check, plan_for(opt.check, opt));
    std::cerr << opt.check << ": " << rep.failures << " failures in " << rep.elapsed_s << " s\n";
    emit(renyi::report_to_json(rep, write_instances(rep, opt.instances_dir), opt.timing), opt.out);
    return rep.failures == 0 ? kExitOk : kExitCheckFailed;
  }
  Json checks = Json::array();
  int total_failures = 0;
  for (const auto& [name, fn] : renyi::check_registry()) {
    renyi::PropertyReport rep = fn(plan_for(name, opt));
    std::cerr << name << ": " << rep.failures << " failures, " << rep.inconclusive << " inconclusive in "
              << rep.elapsed_s << " s\n";
    total_failures += rep.failures;
    checks.push_back(renyi::report_to_json(rep, write_instances(rep, opt.instances_dir), opt.timing));
  }
  Json j;
  j["seed"] = opt.seed;
  j["total_failures"] = total_failures;
  j["checks"] = std::move(checks);
  emit(j, opt.out);
  return total_failures == 0 ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct ScanOptions {
  std::string rho_path, sigma_path;
  std::string grid = "0.5:4:8";
  std::string format = "json";
  bool bits = false;
  std::string out;
};

struct ScanRow {
  double alpha;
  double value;
  bool support_violated;
  bool umegaki;
};

int run_scan(const ScanOptions& opt) {
  double start = 0.0, stop = 0.0;
  int count = 0;
  {
    std::stringstream ss(opt.grid);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
      throw UsageError("bad --grid spec, expected start:stop:count");
    try {
      start = std::stod(a);
      stop = std::stod(b);
      count = std::stoi(c);
    } catch (const std::exception&) {
      throw UsageError("bad --grid spec, expected start:stop:count");
    }
  }
  if (!(start > 0.0) || !(stop >= start) || count < 1) throw UsageError("grid must satisfy 0 < start <= stop, count >= 1");
  renyi::DensityMatrix rho = renyi::density_from_json(renyi::load_json_file(opt.rho_path));
  renyi::DensityMatrix sigma = renyi::density_from_json(renyi::load_json_file(opt.sigma_path));

  std::vector<ScanRow> rows;
  for (int i = 0; i < count; ++i) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const double a = std::exp(std::log(start) + frac * (std::log(stop) - std::log(start)));
    ScanRow row{a, 0.0, false, false};
    if (std::abs(a - 1.0) <= renyi::kAlphaOneGuard) {
      renyi::DivergenceValue d = renyi::umegaki(rho, sigma);
      row.alpha = 1.0;
      row.value = scale_bits(d.value, opt.bits);
      row.support_violated = d.support_violated;
      row.umegaki = true;
    } else {
      renyi::DivergenceValue d = renyi::sandwiched_renyi(rho, sigma, renyi::AlphaOrder(a));
      row.value = scale_bits(d.value, opt.bits);
      row.support_violated = d.support_violated;
    }
    rows.push_back(row);
  }
  // Adjacent rows with alpha > 1 must be nondecreasing; flag the rest.
  std::vector<std::pair<int, int>> violations;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].alpha > 1.0 && rows[i + 1].alpha > 1.0 && rows[i + 1].value < rows[i].value - 1e-9)
      violations.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));

  if (opt.format == "csv") {
    std::ostringstream os;
    os << "alpha,value,support_violated\n";
    for (const ScanRow& r : rows) {
      os.precision(17);
      os << r.alpha << "," << r.value << "," << (r.support_violated ? 1 : 0) << "\n";
    }
    if (std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.umegaki; })) {
      os << "# umegaki rows:";
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].umegaki) os << " " << i;
      os << "\n";
    }
    os << "# monotone violations (alpha>1):";
    if (violations.empty()) {
      os << " none";
    } else {
      for (const auto& [i, j] : violations) os << " " << i << "->" << j;
    }
    os << "\n";
    if (opt.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(opt.out);
      if (!f) throw std::invalid_argument("cannot write file: " + opt.out);
      f << os.str();
    }
    return kExitOk;
  }
  if (opt.format != "json") throw UsageError("unknown --format: " + opt.format);
  Json j;
  Json jrows = Json::array();
  for (const ScanRow& r : rows)
    jrows.push_back(Json{{"alpha", r.alpha},
                         {"value", r.value},
                         {"support_violated", r.support_violated},
                         {"umegaki", r.umegaki}});
  j["rows"] = std::move(jrows);
  Json jv = Json::array();
  for (const auto& [i, jx] : violations) jv.push_back(Json::array({i, jx}));
  j["monotone_violations"] = std::move(jv);
  emit(j, opt.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandwiched Renyi divergence toolkit"};
  app.require_subcommand(1);

  // compute
  CLI::App* compute = app.add_subcommand("compute", "Closed-form and optimized entropic quantities");
  compute->require_subcommand(1);
  ComputeOptions copt;
  const std::vector<std::string> compute_subs{"divergence", "entropy", "conditional-entropy", "mutual-info",
                                              "holevo"};
  for (const std::string& name : compute_subs) {
    CLI::App* sub = compute->add_subcommand(name);
    if (name != "holevo") sub->add_option("--rho", copt.rho_path, "state JSON file")->required();
    if (name == "divergence") sub->add_option("--sigma", copt.sigma_path, "state JSON file")->required();
    if (name == "holevo") {
      sub->add_option("--channel", copt.channel_path, "channel JSON file")->required();
      sub->add_option("--k", copt.k, "ensemble size");
    }
    sub->add_option("--alpha", copt.alpha, "Renyi order (positive, 1, or inf)");
    sub->add_flag("--bits", copt.bits, "report values in bits instead of nats");
    if (name == "mutual-info") sub->add_flag("--dual", copt.dual, "use the purification-based dual route");
    if (name == "conditional-entropy" || name == "mutual-info" || name == "holevo") {
      sub->add_option("--restarts", copt.restarts, "optimizer restarts");
      sub->add_option("--seed", copt.seed, "optimizer seed");
      sub->add_option("--tol", copt.tol, "optimizer tolerance");
    }
    sub->add_option("--out", copt.out, "write JSON here instead of stdout");
  }

  // verify
  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "Randomized property suites");
  verify->add_option("check", vopt.check, "check name or 'all'")->required();
  int trials_flag = 0;
  std::string dims_flag, alphas_flag;
  CLI::Option* trials_opt = verify->add_option("--trials", trials_flag, "trials per check");
  CLI::Option* dims_opt = verify->add_option("--dims", dims_flag, "comma-separated dimensions");
  CLI::Option* alphas_opt = verify->add_option("--alphas", alphas_flag, "comma-separated alpha grid");
  verify->add_option("--seed", vopt.seed, "master seed");
  verify->add_option("--out", vopt.out, "write the report JSON here");
  verify->add_option("--instances-dir", vopt.instances_dir, "directory for failure instance files");
  verify->add_option("--replay", vopt.replay, "re-run a serialized failure instance");
  verify->add_flag("--timing", vopt.timing, "embed wall times in the report (breaks byte-stability)");

  // scan-alpha
  ScanOptions sopt;
  CLI::App* scan = app.add_subcommand("scan-alpha", "Tabulate D_alpha over a log-spaced grid");
  scan->add_option("--rho", sopt.rho_path, "state JSON file")->required();
  scan->add_option("--sigma", sopt.sigma_path, "state JSON file")->required();
  scan->add_option("--grid", sopt.grid, "start:stop:count, log-spaced");
  scan->add_option("--format", sopt.format, "json or csv");
  scan->add_flag("--bits", sopt.bits, "report values in bits instead of nats");
  scan->add_option("--out", sopt.out, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      for (const std::string& name : compute_subs)
        if (compute->get_subcommand(name)->parsed()) return run_compute(name, copt);
      throw UsageError("missing compute subcommand");
    }
    if (verify->parsed()) {
      if (trials_opt->count()) vopt.trials = trials_flag;
      if (dims_opt->count()) vopt.dims = dims_flag;
      if (alphas_opt->count()) vopt.alphas = alphas_flag;
      bool known = vopt.check == "all";
      for (const auto& [name, fn] : renyi::check_registry()) known = known || name == vopt.check;
      if (!known) throw UsageError("unknown check: " + vopt.check);
      return run_verify(vopt);
    }
    if (scan->parsed()) return run_scan(sopt);
    throw UsageError("missing subcommand");
  } catch (const UsageError& e) {
    Json err{{"error", "usage"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    Json err{{"error", "invalid-input"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    Json err{{"error", "domain"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    Json err{{"error", "internal"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitUsage;
  }
}
