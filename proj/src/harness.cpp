#include "acgd/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace acgd {
namespace {

const std::vector<std::string> kProblems = {
    "lasso",      "matrix-balancing", "logistic", "sigmoid-ls", "simplex-qp",
    "least-squares", "rosenbrock",    "levy",     "zakharov",   "sum-of-squares",
    "huber-completion", "quadratic"};

const std::vector<std::string> kLmoNames = {"l1", "l2", "linf", "simplex", "box",
                                             "nuclear", "spectral"};

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(v)) {
    throw ConfigError("invalid value '" + text + "' for " + key + " (expected a number)");
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("invalid value '" + text + "' for " + key + " (expected an integer)");
  }
  return v;
}

Index to_size(const std::string& key, const std::string& text) {
  const long long v = to_integer(key, text);
  if (v < 1) throw ConfigError(key + " must be at least 1");
  return static_cast<Index>(v);
}

double positive(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (!(v > 0.0)) throw ConfigError(key + " must be positive");
  return v;
}

struct ProblemDefaults {
  Mode mode = Mode::Constrained;
  std::string lmo;
  // Matrix shape for nuclear / spectral regions, 0 when not a matrix problem.
  Index rows = 0;
  Index cols = 0;
};

struct ProblemSetup {
  ProblemInstance instance;
  ProblemDefaults d;
};

SparseDataset dataset_for(const RunSpec& spec) {
  if (spec.data) return load_libsvm(*spec.data);
  return make_classification(spec.m.value_or(500), spec.n.value_or(100),
                             spec.density.value_or(0.1), spec.seed);
}

ProblemInstance build_instance(const RunSpec& spec, ProblemDefaults& s) {
  const std::string& p = spec.problem;
  if (p == "lasso") {
    s.lmo = "l1";
    SyntheticSpec syn;
    syn.m = spec.m.value_or(200);
    syn.n = spec.n.value_or(1000);
    syn.tau = spec.tau.value_or(10.0);
    syn.seed = spec.seed;
    syn.density = spec.density;
    return make_lasso(syn);
  }
  if (p == "matrix-balancing") {
    s.lmo = "box";
    return make_matrix_balancing(spec.n.value_or(100), spec.lower.value_or(1.0),
                                 spec.upper.value_or(10.0), spec.density.value_or(5.0),
                                 spec.seed);
  }
  if (p == "logistic") {
    s.lmo = "l1";
    return make_logistic(dataset_for(spec), spec.tau.value_or(10.0));
  }
  if (p == "sigmoid-ls") {
    const bool constrained = spec.mode.value_or(Mode::Constrained) == Mode::Constrained;
    s.mode = constrained ? Mode::Constrained : Mode::Unconstrained;
    s.lmo = constrained ? "l1" : "l2";
    std::optional<double> tau;
    if (constrained) tau = spec.tau.value_or(50.0);
    return make_sigmoid_ls(dataset_for(spec), tau);
  }
  if (p == "simplex-qp") {
    s.lmo = "simplex";
    return make_simplex_qp(random_indefinite_matrix(spec.n.value_or(100), spec.seed));
  }
  if (p == "huber-completion") {
    s.lmo = "nuclear";
    s.rows = spec.m.value_or(30);
    s.cols = spec.n.value_or(20);
    return make_huber_completion(s.rows, s.cols, spec.frac.value_or(0.3), spec.rho.value_or(1.0),
                                 spec.tau.value_or(50.0), spec.seed);
  }
  s.mode = Mode::Unconstrained;
  s.lmo = "l2";
  if (p == "least-squares") {
    SyntheticSpec syn;
    syn.m = spec.m.value_or(2000);
    syn.n = spec.n.value_or(100);
    syn.seed = spec.seed;
    return make_least_squares(syn, false);
  }
  if (p == "rosenbrock") return make_rosenbrock(spec.n.value_or(100));
  if (p == "levy") return make_levy(spec.n.value_or(100));
  if (p == "zakharov") return make_zakharov(spec.n.value_or(20));
  if (p == "sum-of-squares") return make_sum_of_squares(spec.n.value_or(20));
  if (p == "quadratic") {
    return make_strongly_convex_quadratic(spec.n.value_or(20), spec.mu.value_or(1.0),
                                          spec.lipschitz.value_or(10.0), false, spec.seed);
  }
  throw ConfigError("unknown problem '" + p + "' (valid: " + problem_names() + ")");
}

ProblemSetup build_problem(const RunSpec& spec) {
  ProblemDefaults d;
  ProblemInstance inst = build_instance(spec, d);
  return ProblemSetup{std::move(inst), std::move(d)};
}

Region region_for(const ProblemSetup& s, Mode mode, const std::string& name,
                  std::optional<double> tau_override) {
  const Index n = s.instance.objective.dim();
  if (mode == Mode::Unconstrained) {
    if (name == "l1") return Region::norm_ball(NormId::L1, n, 1.0);
    if (name == "l2") return Region::norm_ball(NormId::L2, n, 1.0);
    if (name == "linf") return Region::norm_ball(NormId::LInf, n, 1.0);
    throw ConfigError("unconstrained mode needs a norm-ball lmo (l1, l2, linf), got '" + name +
                      "'");
  }
  const bool is_default_region = s.instance.region && name == s.d.lmo;
  if (is_default_region && (!tau_override || *tau_override == s.instance.region->tau)) {
    return *s.instance.region;
  }
  double tau = tau_override.value_or(s.instance.region ? s.instance.region->tau : 1.0);
  if (name == "l1") return Region::l1_ball(n, tau);
  if (name == "l2") return Region::l2_ball(n, tau);
  if (name == "linf") return Region::linf_ball(n, tau);
  if (name == "simplex") return Region::simplex(n, tau);
  if (name == "nuclear" || name == "spectral") {
    if (s.d.rows == 0) throw ConfigError("lmo '" + name + "' needs a matrix problem");
    return name == "nuclear" ? Region::nuclear_ball(s.d.rows, s.d.cols, tau)
                             : Region::spectral_ball(s.d.rows, s.d.cols, tau);
  }
  if (name == "box") {
    if (is_default_region) return *s.instance.region;
    throw ConfigError("lmo 'box' is only available for matrix-balancing");
  }
  throw ConfigError("unknown lmo '" + name + "' (valid: " + join(kLmoNames, ", ") + ")");
}

// Largest gradient norm over the given points.
double max_grad_over(const Objective& f, const std::vector<Vector>& points) {
  double best = 0.0;
  for (const auto& x : points) best = std::max(best, f.gradient(x).norm());
  return best;
}

std::string best_marks(const SummaryRow& row) { return join(row.best, ";"); }

}  // namespace

std::string problem_names() { return join(kProblems, ", "); }

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = {
      "problem", "strategy", "mode",    "lmo",     "tau",   "m",       "n",
      "tol",     "max-iter", "seed",    "gamma",   "beta",  "delta",   "r",
      "out",     "data",     "rho",     "density", "frac",  "lower",   "upper",
      "mu",      "lipschitz", "backtrack-norm"};
  return keys;
}

void apply_setting(RunSpec& spec, const std::string& raw_key, const std::string& raw_value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '_', '-');
  const std::string value = trim(raw_value);
  if (key == "problem") {
    if (std::find(kProblems.begin(), kProblems.end(), value) == kProblems.end()) {
      throw ConfigError("unknown problem '" + value + "' (valid: " + problem_names() + ")");
    }
    spec.problem = value;
  } else if (key == "strategy") {
    parse_step_rule(value);
    spec.strategy = value;
  } else if (key == "mode") {
    spec.mode = parse_mode(value);
  } else if (key == "lmo") {
    if (std::find(kLmoNames.begin(), kLmoNames.end(), value) == kLmoNames.end()) {
      throw ConfigError("unknown lmo '" + value + "' (valid: " + join(kLmoNames, ", ") + ")");
    }
    spec.lmo = value;
  } else if (key == "tau") {
    spec.tau = positive(key, value);
  } else if (key == "m") {
    spec.m = to_size(key, value);
  } else if (key == "n") {
    spec.n = to_size(key, value);
  } else if (key == "tol") {
    spec.tol = positive(key, value);
  } else if (key == "max-iter") {
    spec.max_iter = static_cast<long>(to_size(key, value));
  } else if (key == "seed") {
    const long long v = to_integer(key, value);
    if (v < 0) throw ConfigError("seed must be non-negative");
    spec.seed = static_cast<std::uint64_t>(v);
  } else if (key == "gamma") {
    spec.gamma = positive(key, value);
  } else if (key == "beta") {
    spec.beta = to_double(key, value);
  } else if (key == "delta") {
    spec.delta = to_double(key, value);
  } else if (key == "r") {
    spec.r = static_cast<int>(to_size(key, value));
  } else if (key == "out") {
    spec.out = value;
  } else if (key == "data") {
    spec.data = value;
  } else if (key == "rho") {
    spec.rho = positive(key, value);
  } else if (key == "density") {
    spec.density = positive(key, value);
  } else if (key == "frac") {
    spec.frac = positive(key, value);
  } else if (key == "lower") {
    spec.lower = to_double(key, value);
  } else if (key == "upper") {
    spec.upper = to_double(key, value);
  } else if (key == "mu") {
    spec.mu = positive(key, value);
  } else if (key == "lipschitz") {
    spec.lipschitz = positive(key, value);
  } else if (key == "backtrack-norm") {
    try {
      spec.backtrack_norm = parse_norm(value);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  } else {
    throw ConfigError("unknown setting '" + raw_key + "' (valid: " + join(setting_keys(), ", ") +
                      ")");
  }
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (std::find(setting_keys().begin(), setting_keys().end(), key) == setting_keys().end()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("ACGD_SEED");
  if (env == nullptr || *env == '\0') return 0;
  RunSpec tmp;
  apply_setting(tmp, "seed", env);
  return tmp.seed;
}

std::string to_config(const RunSpec& spec) {
  std::ostringstream o;
  auto put = [&o](const char* k, const std::string& v) { o << k << " = " << v << '\n'; };
  auto num = [&](const char* k, const std::optional<double>& v) {
    if (v) put(k, format_double(*v));
  };
  auto idx = [&](const char* k, const std::optional<Index>& v) {
    if (v) put(k, std::to_string(*v));
  };
  put("problem", spec.problem);
  put("strategy", spec.strategy);
  if (spec.mode) put("mode", std::string(to_string(*spec.mode)));
  if (spec.lmo) put("lmo", *spec.lmo);
  num("tau", spec.tau);
  idx("m", spec.m);
  idx("n", spec.n);
  put("tol", format_double(spec.tol));
  put("max-iter", std::to_string(spec.max_iter));
  put("seed", std::to_string(spec.seed));
  num("gamma", spec.gamma);
  num("beta", spec.beta);
  num("delta", spec.delta);
  if (spec.r) put("r", std::to_string(*spec.r));
  if (!spec.out.empty()) put("out", spec.out);
  if (spec.data) put("data", *spec.data);
  num("rho", spec.rho);
  num("density", spec.density);
  num("frac", spec.frac);
  num("lower", spec.lower);
  num("upper", spec.upper);
  num("mu", spec.mu);
  num("lipschitz", spec.lipschitz);
  put("backtrack-norm", std::string(to_string(spec.backtrack_norm)));
  return o.str();
}

Experiment prepare(const RunSpec& spec) {
  ProblemSetup s = build_problem(spec);
  const Mode mode = spec.mode.value_or(s.d.mode);
  std::string lmo_name = spec.lmo.value_or(s.d.lmo);
  if (mode == Mode::Unconstrained && !spec.lmo &&
      (lmo_name != "l1" && lmo_name != "l2" && lmo_name != "linf")) {
    lmo_name = "l2";
  }
  // An unconstrained problem run in constrained mode gets a ball of radius tau (default 1).
  SolverConfig config;
  config.mode = mode;
  config.region = region_for(s, mode, lmo_name, spec.tau);
  config.strategy.rule = parse_step_rule(spec.strategy);
  if (spec.gamma) config.strategy.gamma0 = *spec.gamma;
  if (spec.beta) config.strategy.beta = *spec.beta;
  if (spec.delta) config.strategy.delta = *spec.delta;
  if (spec.r) config.strategy.period = *spec.r;
  if (config.strategy.rule == StepRule::ShortStep) {
    config.strategy.global_L = s.instance.objective.known_lipschitz;
  }
  config.strategy.validate();
  config.backtrack_norm = spec.backtrack_norm;
  config.tol = spec.tol;
  config.max_iter = spec.max_iter;
  config.seed = spec.seed;
  // The known optimum only applies over the problem's own feasible set.
  const bool native_region = s.instance.region && lmo_name == s.d.lmo &&
                             (!spec.tau || *spec.tau == s.instance.region->tau);
  config.use_functional_gap = mode == Mode::Constrained && native_region &&
                                s.instance.objective.known_optimum.has_value();
  return Experiment{std::move(s.instance), std::move(config)};
}

SolverResult run(const RunSpec& spec) {
  const Experiment e = prepare(spec);
  return solve(e.instance.objective, e.config, e.instance.x0);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw NumericError("format_double: buffer too small");
  return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& out, const SolverResult& result) {
  out << kTraceHeader << '\n';
  for (const auto& r : result.trace) {
    out << r.k << ',' << format_double(r.objective) << ',' << format_double(r.gap) << ','
        << format_double(r.t) << ',' << format_double(r.L_accepted) << ',' << r.n_backtracks
        << ',' << format_double(r.gamma) << ',' << r.grad_evals << ',' << r.fn_evals << '\n';
  }
}

std::vector<SummaryRow> compare(const RunSpec& spec, const std::vector<std::string>& strategies) {
  if (strategies.empty()) throw ConfigError("compare needs at least one strategy");
  RunSpec base = spec;
  base.strategy = "adaptive-constant";
  const Experiment shared = prepare(base);

  std::vector<std::future<SummaryRow>> jobs;
  jobs.reserve(strategies.size());
  for (const auto& name : strategies) {
    jobs.push_back(std::async(std::launch::async, [&shared, &spec, name] {
      SummaryRow row;
      row.strategy = name;
      try {
        SolverConfig config = shared.config;
        config.strategy = StepStrategy{};
        config.strategy.rule = parse_step_rule(name);
        if (spec.gamma) config.strategy.gamma0 = *spec.gamma;
        if (spec.beta) config.strategy.beta = *spec.beta;
        if (spec.delta) config.strategy.delta = *spec.delta;
        if (spec.r) config.strategy.period = *spec.r;
        const SolverResult res = solve(shared.instance.objective, config, shared.instance.x0);
        row.status = std::string(to_string(res.status));
        row.iterations = res.iterations;
        row.objective_final = res.final_objective;
        row.gap_final = res.final_gap;
        row.grad_evals = res.grad_evals;
        row.fn_evals = res.fn_evals;
        row.error = res.error;
      } catch (const std::exception& e) {
        row.status = "error";
        row.error = e.what();
      }
      return row;
    }));
  }
  std::vector<SummaryRow> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());

  auto mark = [&rows](const char* column, auto value) {
    bool any = false;
    double best = 0.0;
    for (const auto& r : rows) {
      if (r.status == "error") continue;
      const double v = value(r);
      if (!any || v < best) best = v;
      any = true;
    }
    for (auto& r : rows) {
      if (any && r.status != "error" && value(r) == best) r.best.emplace_back(column);
    }
  };
  mark("iterations", [](const SummaryRow& r) { return static_cast<double>(r.iterations); });
  mark("objective_final", [](const SummaryRow& r) { return r.objective_final; });
  mark("gap_final", [](const SummaryRow& r) { return r.gap_final; });
  mark("grad_evals", [](const SummaryRow& r) { return static_cast<double>(r.grad_evals); });
  mark("fn_evals", [](const SummaryRow& r) { return static_cast<double>(r.fn_evals); });
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "strategy,status,iterations,objective_final,gap_final,grad_evals,fn_evals,best\n";
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.status << ',' << r.iterations << ','
        << format_double(r.objective_final) << ',' << format_double(r.gap_final) << ','
        << r.grad_evals << ',' << r.fn_evals << ',' << best_marks(r) << '\n';
  }
}

void print_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows) {
  auto cell = [](const SummaryRow& r, const char* col, const std::string& text) {
    const bool best = std::find(r.best.begin(), r.best.end(), col) != r.best.end();
    return best ? text + "*" : text;
  };
  auto sci = [](double v) {
    std::ostringstream o;
    o << std::scientific << std::setprecision(6) << v;
    return o.str();
  };
  out << std::left << std::setw(22) << "strategy" << std::setw(10) << "status" << std::right
      << std::setw(12) << "iterations" << std::setw(18) << "objective" << std::setw(18) << "gap"
      << std::setw(12) << "grad_evals" << std::setw(12) << "fn_evals" << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(22) << r.strategy << std::setw(10) << r.status << std::right;
    if (r.status == "error" && r.iterations == 0 && r.grad_evals == 0) {
      out << "  " << r.error << '\n';
      continue;
    }
    out << std::setw(12) << cell(r, "iterations", std::to_string(r.iterations)) << std::setw(18)
        << cell(r, "objective_final", sci(r.objective_final)) << std::setw(18)
        << cell(r, "gap_final", sci(r.gap_final)) << std::setw(12)
        << cell(r, "grad_evals", std::to_string(r.grad_evals)) << std::setw(12)
        << cell(r, "fn_evals", std::to_string(r.fn_evals)) << '\n';
    if (!r.error.empty()) out << "  error: " << r.error << '\n';
  }
  out << "(* marks the best value in each column)\n";
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

bool RateReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const RateCheck& c) { return c.status == CheckStatus::Fail; });
}

RateReport verify_rates(const std::string& family, const std::string& strategy,
                        const std::vector<long>& Ns, std::uint64_t seed) {
  if (Ns.empty()) throw ConfigError("verify-rates needs at least one N");
  for (long N : Ns) {
    if (N < 1) throw ConfigError("verify-rates: N must be at least 1");
  }
  RateReport report;
  report.family = family;
  report.strategy = strategy;

  SolverConfig config;
  config.strategy.rule = parse_step_rule(strategy);
  config.seed = seed;
  config.max_iter = *std::max_element(Ns.begin(), Ns.end());
  config.tol = std::numeric_limits<double>::min();

  std::optional<ProblemInstance> holder;
  RateBound& b = report.constants;
  double f_star = 0.0;
  std::string h0_note;

  if (family == "quadratic") {
    const double mu = 1.0;
    const double L = 10.0;
    const ProblemInstance& inst = holder.emplace(make_strongly_convex_quadratic(20, mu, L, true, seed));
    config.mode = Mode::Unconstrained;
    config.region = Region::l2_ball(inst.objective.dim(), 1.0);
    b.L = L;
    b.mu = mu;
    b.zeta = 1.0;
    b.eta = 1.0;
  } else if (family == "lasso") {
    SyntheticSpec syn;
    syn.seed = seed;
    const ProblemInstance& inst = holder.emplace(make_lasso(syn));
    config.mode = Mode::Constrained;
    config.region = *inst.region;
    const Index n = inst.objective.dim();
    const double tau = inst.region->tau;
    std::vector<Vector> vertices;
    for (Index j = 0; j < n; ++j) {
      for (double sgn : {1.0, -1.0}) {
        Vector v = Vector::Zero(n);
        v(j) = sgn * tau;
        vertices.push_back(std::move(v));
      }
    }
    // The gradient is affine, so its norm peaks at a vertex.
    b.max_grad = max_grad_over(inst.objective, vertices);
    b.L = inst.objective.known_lipschitz;
    b.D = 2.0 * tau;
    b.eta = 1.0;
  } else if (family == "simplex-qp") {
    const Matrix Q = random_indefinite_matrix(100, seed);
    const ProblemInstance& inst = holder.emplace(make_simplex_qp(Q));
    config.mode = Mode::Constrained;
    config.region = *inst.region;
    const Index n = inst.objective.dim();
    std::vector<Vector> vertices;
    for (Index j = 0; j < n; ++j) vertices.push_back(Vector::Unit(n, j));
    b.max_grad = max_grad_over(inst.objective, vertices);
    b.L = inst.objective.known_lipschitz;
    b.D = std::sqrt(2.0);
    // x^T Q x is a convex combination of the Q_ij on the simplex.
    f_star = Q.minCoeff();
    h0_note = "h0 uses the lower bound min Q_ij for f*";
  } else {
    throw ConfigError("unknown rate family '" + family +
                      "' (valid: quadratic, lasso, simplex-qp)");
  }
  const ProblemInstance& inst = *holder;
  if (config.strategy.rule == StepRule::ShortStep) {
    config.strategy.global_L = inst.objective.known_lipschitz;
  }
  config.strategy.validate();

  const double beta = config.strategy.beta;
  const double delta = config.strategy.delta;
  if (b.max_grad && b.L && b.D) b.C = rate_constant(*b.L, beta, delta, *b.max_grad, *b.D);

  const double h0 = inst.objective.value(inst.x0) - f_star;
  if (family == "quadratic") b.R = std::sqrt(2.0 * h0 / *b.mu);

  const SolverResult res = solve(inst.objective, config, inst.x0);
  const auto& trace = res.trace;
  auto h_at = [&](long N) {
    const auto i = static_cast<std::size_t>(N);
    return (i < trace.size() ? trace[i].objective : res.final_objective) - f_star;
  };
  auto min_gap_upto = [&](long N) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : trace) {
      if (r.k > N) break;
      m = std::min(m, r.gap);
    }
    if (static_cast<std::size_t>(N) >= trace.size() && res.status != Status::Error) {
      m = std::min(m, res.final_gap);
    }
    return m;
  };
  auto check = [&](const std::string& name, long N, double observed, double limit,
                   std::string note) {
    RateCheck c;
    c.bound = name;
    c.N = N;
    c.observed = observed;
    c.limit = limit;
    c.note = std::move(note);
    if (res.status == Status::Error && static_cast<std::size_t>(N) >= trace.size()) {
      c.status = CheckStatus::Fail;
      c.note = "solver error: " + res.error;
    } else {
      c.status = observed <= limit * (1.0 + 1e-12) ? CheckStatus::Pass : CheckStatus::Fail;
    }
    report.checks.push_back(std::move(c));
  };
  auto skip = [&](const std::string& name, long N, std::string note) {
    RateCheck c;
    c.bound = name;
    c.N = N;
    c.status = CheckStatus::Skipped;
    c.note = std::move(note);
    report.checks.push_back(std::move(c));
  };

  for (long N : Ns) {
    const double Nd = static_cast<double>(N);
    if (config.mode == Mode::Unconstrained) {
      const double K = 2.0 * beta * (*b.L + delta) * (*b.zeta) * (*b.zeta);
      const double g = min_gap_upto(N);
      check("nonconvex", N, g * g, K * h0 / (Nd + 1.0), "min gap^2");
      const double KR = K * (*b.R) * (*b.R);
      check("quasar-convex", N, h_at(N), KR / (KR / h0 + Nd * (*b.eta) * (*b.eta)), "h_N");
      const double q = 1.0 - *b.mu / (beta * (*b.L + delta) * (*b.zeta) * (*b.zeta));
      check("strongly-convex", N, h_at(N), std::pow(q, Nd) * h0, "h_N");
    } else {
      if (!b.C) {
        skip("nonconvex", N, "C unknown");
        skip("quasar-convex", N, "C unknown");
        continue;
      }
      const double C = *b.C;
      check("nonconvex", N, min_gap_upto(N), std::sqrt(2.0 * C * h0 / (Nd + 1.0)),
            h0_note.empty() ? "min gap" : "min gap; " + h0_note);
      if (b.eta) {
        check("quasar-convex", N, h_at(N), 2.0 * C / (Nd * (*b.eta) * (*b.eta) + 2.0 * C / h0),
              "h_N");
      } else {
        skip("quasar-convex", N, "eta unknown (non-convex)");
      }
      skip("strongly-convex", N, "mu unknown");
    }
  }
  return report;
}

void write_rate_report(std::ostream& out, const RateReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : "-"; };
  const auto& b = report.constants;
  out << "# family=" << report.family << " strategy=" << report.strategy << '\n';
  out << "# L=" << opt(b.L) << " mu=" << opt(b.mu) << " eta=" << opt(b.eta) << " D=" << opt(b.D)
      << " R=" << opt(b.R) << " zeta=" << opt(b.zeta) << " C=" << opt(b.C)
      << " max_grad=" << opt(b.max_grad) << '\n';
  out << "bound,N,status,observed,limit,note\n";
  for (const auto& c : report.checks) {
    out << c.bound << ',' << c.N << ',' << to_string(c.status) << ','
        << (c.status == CheckStatus::Skipped ? "" : format_double(c.observed)) << ','
        << (c.status == CheckStatus::Skipped ? "" : format_double(c.limit)) << ',' << c.note
        << '\n';
  }
  out << (report.all_passed() ? "result: pass" : "result: fail") << '\n';
}

}  // namespace acgd
