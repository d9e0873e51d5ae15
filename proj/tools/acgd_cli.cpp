// acgd command-line harness: run, compare, verify-rates.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "acgd/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using Clock = std::chrono::steady_clock;

void report_seconds(const char* what, Clock::time_point start) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::cerr << what << " wall-clock: " << s << " s\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// One string slot per setting key; only flags that were given are applied.
struct SpecFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  CLI::Option* config = nullptr;

  void attach(CLI::App* app, const std::vector<std::string>& skip = {}) {
    for (const auto& key : acgd::setting_keys()) {
      if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
      options[key] = app->add_option("--" + key, values[key]);
    }
    config = app->add_option("--config", config_path, "plain 'key = value' file");
  }

  acgd::RunSpec build() const {
    acgd::RunSpec spec;
    spec.seed = acgd::default_seed();
    if (config->count() > 0) {
      for (const auto& [k, v] : acgd::load_config(config_path)) acgd::apply_setting(spec, k, v);
    }
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) acgd::apply_setting(spec, key, values.at(key));
    }
    return spec;
  }
};

int cmd_run(const SpecFlags& flags) {
  const acgd::RunSpec spec = flags.build();
  const auto start = Clock::now();
  const acgd::SolverResult res = acgd::run(spec);
  report_seconds("run", start);

  std::ostream* summary = &std::cout;
  if (spec.out.empty()) {
    acgd::write_trace_csv(std::cout, res);
    summary = &std::cerr;
  } else {
    std::ofstream out(spec.out);
    if (!out) throw acgd::DataError("cannot write '" + spec.out + "'");
    acgd::write_trace_csv(out, res);
  }
  *summary << "status=" << acgd::to_string(res.status) << " iterations=" << res.iterations
           << " objective=" << acgd::format_double(res.final_objective)
           << " gap=" << acgd::format_double(res.final_gap) << " grad_evals=" << res.grad_evals
           << " fn_evals=" << res.fn_evals << '\n';
  if (res.status == acgd::Status::Error) {
    std::cerr << "error: " << res.error << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_compare(const SpecFlags& flags, const std::string& strategies) {
  const acgd::RunSpec spec = flags.build();
  const auto names = split_list(strategies);
  const auto start = Clock::now();
  const auto rows = acgd::compare(spec, names);
  report_seconds("compare", start);
  acgd::print_summary_table(std::cout, rows);
  if (!spec.out.empty()) {
    std::ofstream out(spec.out);
    if (!out) throw acgd::DataError("cannot write '" + spec.out + "'");
    acgd::write_summary_csv(out, rows);
  }
  return kExitOk;
}

int cmd_verify(const std::string& family, const std::string& strategy, const std::string& ns,
               std::uint64_t seed, const std::string& out_path) {
  std::vector<long> Ns;
  for (const auto& item : split_list(ns)) {
    acgd::RunSpec tmp;
    acgd::apply_setting(tmp, "max-iter", item);
    Ns.push_back(tmp.max_iter);
  }
  const auto start = Clock::now();
  const acgd::RateReport report = acgd::verify_rates(family, strategy, Ns, seed);
  report_seconds("verify-rates", start);
  acgd::write_rate_report(std::cout, report);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw acgd::DataError("cannot write '" + out_path + "'");
    acgd::write_rate_report(out, report);
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive conditional gradient descent benchmarks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "solve one problem and write the per-iteration trace");
  SpecFlags run_flags;
  run_flags.attach(run);

  auto* cmp = app.add_subcommand("compare", "run several step-size strategies on one instance");
  SpecFlags cmp_flags;
  cmp_flags.attach(cmp, {"strategy"});
  std::string strategies =
      "adaptive-constant,adaptive-adjustable,pure-backtracking,short-step,open-loop";
  cmp->add_option("--strategies", strategies, "comma separated strategy names")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify-rates", "check convergence-rate bounds");
  std::string family = "quadratic";
  std::string ver_strategy = "adaptive-adjustable";
  std::string ns = "10,100,1000";
  std::string ver_seed;
  std::string ver_out;
  ver->add_option("--family", family, "quadratic, lasso or simplex-qp")->capture_default_str();
  ver->add_option("--strategy", ver_strategy)->capture_default_str();
  ver->add_option("--N", ns, "comma separated iteration counts")->capture_default_str();
  auto* ver_seed_opt = ver->add_option("--seed", ver_seed);
  ver->add_option("--out", ver_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (cmp->parsed()) return cmd_compare(cmp_flags, strategies);
    std::uint64_t seed = acgd::default_seed();
    if (ver_seed_opt->count() > 0) {
      acgd::RunSpec tmp;
      acgd::apply_setting(tmp, "seed", ver_seed);
      seed = tmp.seed;
    }
    return cmd_verify(family, ver_strategy, ns, seed, ver_out);
  } catch (const acgd::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
