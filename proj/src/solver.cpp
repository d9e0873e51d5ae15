#include "acgd/solver.hpp"

#include <limits>
#include <memory>
#include <string>

namespace acgd {
namespace {

struct EvalCounts {
  long fn = 0;
  long grad = 0;
};

Objective counting(const Objective& obj, const std::shared_ptr<EvalCounts>& counts) {
  Objective wrapped(
      obj.name(), obj.dim(),
      [obj, counts](const Vector& x) {
        ++counts->fn;
        return obj.value(x);
      },
      [obj, counts](const Vector& x) {
        ++counts->grad;
        return obj.gradient(x);
      });
  wrapped.known_lipschitz = obj.known_lipschitz;
  wrapped.known_optimum = obj.known_optimum;
  return wrapped;
}

double reported_gamma(const StepStrategy& s, const StepState& state) {
  switch (s.rule) {
    case StepRule::AdaptiveConstant:
      return s.gamma0;
    case StepRule::AdaptiveAdjustable:
      return state.gamma_current;
    default:
      return 1.0;
  }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Constrained ? "constrained" : "unconstrained";
}

Mode parse_mode(std::string_view name) {
  if (name == "constrained") return Mode::Constrained;
  if (name == "unconstrained") return Mode::Unconstrained;
  throw ConfigError("unknown mode '" + std::string(name) +
                    "' (expected constrained, unconstrained)");
}

double t_max(Mode mode) noexcept {
  return mode == Mode::Constrained ? 1.0 : std::numeric_limits<double>::infinity();
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Converged:
      return "converged";
    case Status::MaxIterReached:
      return "max-iter";
    case Status::Error:
      return "error";
  }
  return "error";
}

Vector direction(Mode mode, const Vector& v, const Vector& x) {
  if (v.size() != x.size()) throw DimensionError("direction: length mismatch");
  if (mode == Mode::Unconstrained) return v;
  return v - x;
}

double gap(Mode /*mode*/, const Vector& grad, const Vector& d) {
  if (grad.size() != d.size()) throw DimensionError("gap: length mismatch");
  return -grad.dot(d);
}

SolverResult solve(const Objective& obj, const SolverConfig& config, const Vector& x0) {
  if (x0.size() != obj.dim()) {
    throw DimensionError("start point has length " + std::to_string(x0.size()) +
                         ", objective expects " + std::to_string(obj.dim()));
  }
  if (config.region.dim != obj.dim()) {
    throw DimensionError("region dimension " + std::to_string(config.region.dim) +
                         " does not match objective dimension " + std::to_string(obj.dim()));
  }
  require_finite(x0, "start point");
  if (!(config.tol > 0.0)) throw ConfigError("tol must be positive");
  if (config.max_iter < 1) throw ConfigError("max_iter must be at least 1");
  if (config.use_functional_gap && !obj.known_optimum) {
    throw ConfigError("functional-gap termination needs a known optimum");
  }
  if (config.mode == Mode::Constrained) {
    const double violation = feasibility_violation(config.region, x0);
    if (violation > kFeasibilityTol) {
      throw InfeasibleStartError("start point violates the region by " +
                                 std::to_string(violation));
    }
  }
  StepStrategy strategy = config.strategy;
  if (strategy.rule == StepRule::ShortStep && !strategy.global_L) {
    strategy.global_L = obj.known_lipschitz;
  }
  strategy.validate();

  auto counts = std::make_shared<EvalCounts>();
  const Objective f = counting(obj, counts);
  const double tmax = t_max(config.mode);
  const NormId p = config.backtrack_norm;

  SolverResult result;
  Vector x = x0;
  result.final_x = x;
  StepState state;
  double fx = 0.0;
  Vector g;
  double last_gap = std::numeric_limits<double>::quiet_NaN();

  try {
    fx = f.value(x);
    g = f.gradient(x);
    state = init_step_state(strategy, f, x, g, p, config.seed);

    for (long k = 0;; ++k) {
      const Vector v = lmo(config.region, g);
      const Vector d = direction(config.mode, v, x);
      last_gap = gap(config.mode, g, d);
      const double criterion =
          config.use_functional_gap ? fx - *obj.known_optimum : last_gap;

      TraceRow row;
      row.k = k;
      row.objective = fx;
      row.gap = last_gap;
      row.gamma = reported_gamma(strategy, state);

      if (criterion <= config.tol) {
        row.L_accepted = strategy.rule == StepRule::OpenLoop ? 0.0 : state.L_current;
        row.grad_evals = counts->grad;
        row.fn_evals = counts->fn;
        result.trace.push_back(row);
        result.status = Status::Converged;
        break;
      }
      if (k >= config.max_iter) {
        result.status = Status::MaxIterReached;
        break;
      }

      const StepOutcome step = next_step(strategy, state, f, x, fx, g, d, p, tmax, k);
      Vector x_next = x + step.t * d;
      const double f_next = step.trial_value ? *step.trial_value : f.value(x_next);

      row.t = step.t;
      row.L_accepted = step.L_accepted;
      row.n_backtracks = step.n_backtracks;
      row.grad_evals = counts->grad;
      row.fn_evals = counts->fn;
      result.trace.push_back(row);

      x = std::move(x_next);
      fx = f_next;
      result.final_x = x;
      result.iterations = k + 1;
      g = f.gradient(x);
    }
  } catch (const Error& e) {
    result.status = Status::Error;
    result.error = e.what();
  }

  result.final_x = x;
  result.final_objective = fx;
  result.final_gap = last_gap;
  result.grad_evals = counts->grad;
  result.fn_evals = counts->fn;
  return result;
}

}  // namespace acgd
