#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acgd/problems.hpp"
#include "acgd/solver.hpp"

namespace acgd {

/// Everything needed to reproduce one run. Unset optionals take per-problem defaults.
struct RunSpec {
  std::string problem = "lasso";
  std::string strategy = "adaptive-adjustable";
  std::optional<Mode> mode;
  std::optional<std::string> lmo;
  std::optional<double> tau;
  std::optional<Index> m;
  std::optional<Index> n;
  double tol = 1e-5;
  long max_iter = 3000;
  std::uint64_t seed = 0;
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<double> delta;
  std::optional<int> r;
  NormId backtrack_norm = NormId::L2;
  std::string out;
  std::optional<std::string> data;
  std::optional<double> rho;
  std::optional<double> density;
  std::optional<double> frac;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> mu;
  std::optional<double> lipschitz;
};

/// Problem names accepted by build_problem, comma separated.
std::string problem_names();

/// Keys accepted by apply_setting and config files (CLI flag names without "--").
const std::vector<std::string>& setting_keys();

/// Sets one field from its text form. '_' in the key is read as '-'.
/// Throws ConfigError on unknown keys or malformed values.
void apply_setting(RunSpec& spec, const std::string& key, const std::string& value);

/// Parses "key = value" lines; '#' starts a comment. Throws ConfigError with the line number.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> load_config(const std::string& path);

/// Seed default from the ACGD_SEED environment variable, or 0.
std::uint64_t default_seed();

/// Config-file form of a spec; feeding it back through apply_setting reproduces the spec.
std::string to_config(const RunSpec& spec);

struct Experiment {
  ProblemInstance instance;
  SolverConfig config;
};

/// Builds the problem instance and solver configuration for a spec.
Experiment prepare(const RunSpec& spec);

SolverResult run(const RunSpec& spec);

/// 17 significant digits, "." as decimal point, no grouping.
std::string format_double(double v);

inline constexpr const char* kTraceHeader =
    "iter,objective,gap,t,L,backtracks,gamma,grad_evals,fn_evals";

void write_trace_csv(std::ostream& out, const SolverResult& result);

struct SummaryRow {
  std::string strategy;
  std::string status;
  long iterations = 0;
  double objective_final = 0.0;
  double gap_final = 0.0;
  long grad_evals = 0;
  long fn_evals = 0;
  std::string error;
  /// Names of the columns in which this row is best.
  std::vector<std::string> best;
};

/// Runs every strategy on one shared problem instance (concurrently), rows in input order.
/// A failing strategy yields a row with status "error" and does not affect the others.
std::vector<SummaryRow> compare(const RunSpec& spec, const std::vector<std::string>& strategies);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void print_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s) noexcept;

struct RateCheck {
  std::string bound;
  long N = 0;
  CheckStatus status = CheckStatus::Skipped;
  double observed = 0.0;
  double limit = 0.0;
  std::string note;
};

struct RateReport {
  std::string family;
  std::string strategy;
  RateBound constants;
  std::vector<RateCheck> checks;
  bool all_passed() const;
};

/// Families: quadratic (unconstrained, strongly convex, l2), lasso (constrained,
/// convex), simplex-qp (constrained, non-convex). Runs max(Ns) iterations once and
/// checks every applicable bound at each N.
RateReport verify_rates(const std::string& family, const std::string& strategy,
                        const std::vector<long>& Ns, std::uint64_t seed);

void write_rate_report(std::ostream& out, const RateReport& report);

}  // namespace acgd
