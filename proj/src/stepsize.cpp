#include "acgd/stepsize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace acgd {
namespace {

double squared_norm(NormId p, const Vector& d) {
  const double n = norm(p, d);
  return n * n;
}

}  // namespace

std::string_view to_string(StepRule rule) noexcept {
  switch (rule) {
    case StepRule::AdaptiveConstant:
      return "adaptive-constant";
    case StepRule::AdaptiveAdjustable:
      return "adaptive-adjustable";
    case StepRule::PureBacktracking:
      return "pure-backtracking";
    case StepRule::ShortStep:
      return "short-step";
    case StepRule::OpenLoop:
      return "open-loop";
  }
  return "unknown";
}

std::string_view step_rule_names() noexcept {
  return "adaptive-constant, adaptive-adjustable, pure-backtracking, short-step, open-loop";
}

StepRule parse_step_rule(std::string_view name) {
  for (StepRule r : {StepRule::AdaptiveConstant, StepRule::AdaptiveAdjustable,
                     StepRule::PureBacktracking, StepRule::ShortStep, StepRule::OpenLoop}) {
    if (name == to_string(r)) return r;
  }
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (valid: " + std::string(step_rule_names()) + ")");
}

void StepStrategy::validate() const {
  if (!(gamma0 > 0.0)) throw ConfigError("gamma must be positive");
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  if (!(beta > 1.0)) throw ConfigError("beta must exceed 1");
  if (period < 1) throw ConfigError("period r must be at least 1");
  if (!(eta_down > 0.0) || !(eta_up > 0.0)) throw ConfigError("gamma factors must be positive");
  if (!(pb_decrease > 0.0 && pb_decrease < 1.0)) {
    throw ConfigError("pure-backtracking decrease must lie in (0, 1)");
  }
  if (rule == StepRule::ShortStep && !(global_L && *global_L > 0.0)) {
    throw ConfigError("short-step requires a known global Lipschitz constant");
  }
}

std::optional<double> estimate_local_lipschitz(const Vector& grad_k, const Vector& grad_km1,
                                               const Vector& x_k, const Vector& x_km1, NormId p,
                                               double delta) {
  if (grad_k.size() != grad_km1.size() || x_k.size() != x_km1.size() ||
      grad_k.size() != x_k.size()) {
    throw DimensionError("local Lipschitz estimate: length mismatch");
  }
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  const double displacement = norm(p, x_k - x_km1);
  if (displacement == 0.0) return std::nullopt;
  return dual_norm(p, grad_k - grad_km1) / displacement + delta;
}

double candidate_step(double inner, double L, double d_norm_sq, double t_max) {
  if (d_norm_sq == 0.0) throw DegenerateDirectionError("step along a zero direction");
  if (!(L > 0.0)) throw ConfigError("Lipschitz estimate must be positive");
  const double t = std::min(-inner / (L * d_norm_sq), t_max);
  return std::max(t, 0.0);
}

double short_step(double inner, double L, double d_norm_sq, double t_max) {
  return candidate_step(inner, L, d_norm_sq, t_max);
}

double open_loop_step(long k) {
  if (k < 0) throw ConfigError("iteration counter must be nonnegative");
  return 2.0 / (static_cast<double>(k) + 2.0);
}

bool sufficient_decrease(const Objective& obj, const Vector& x, double fx, const Vector& d,
                         double inner, double t, double L, NormId p, double* trial_value) {
  const double f_trial = obj.value(x + t * d);
  if (trial_value) *trial_value = f_trial;
  // The model increment is grouped so that a nonpositive increment never lifts
  // the bound above f(x) through rounding.
  const double model = t * inner + 0.5 * L * t * t * squared_norm(p, d);
  return f_trial <= fx + model;
}

bool sufficient_decrease(const Objective& obj, const Vector& x, const Vector& d, double t,
                         double L, NormId p) {
  const double fx = obj.value(x);
  const double inner = obj.gradient(x).dot(d);
  return sufficient_decrease(obj, x, fx, d, inner, t, L, p);
}

StepOutcome backtrack(const Objective& obj, const Vector& x, double fx, const Vector& d,
                      double inner, NormId p, double t_max, double L_init, double beta,
                      int max_rounds) {
  if (!(L_init > 0.0)) throw ConfigError("initial Lipschitz estimate must be positive");
  if (!(beta > 1.0)) throw ConfigError("beta must exceed 1");
  if (max_rounds < 1) throw ConfigError("max_rounds must be at least 1");
  const double d_norm_sq = squared_norm(p, d);
  double L = L_init;
  for (int round = 0; round < max_rounds; ++round) {
    const double t = candidate_step(inner, L, d_norm_sq, t_max);
    double trial = 0.0;
    if (sufficient_decrease(obj, x, fx, d, inner, t, L, p, &trial)) {
      return StepOutcome{t, L, round, trial};
    }
    // A predicted decrease below the rounding level of f cannot be observed, and
    // raising L would only shrink the step towards zero. Accept a trial that is
    // equal to f(x) up to that level.
    const double noise = kRoundingSlack * std::abs(fx);
    const double predicted = -(t * inner + 0.5 * L * t * t * d_norm_sq);
    if (predicted <= noise && trial <= fx + noise) {
      return StepOutcome{t, L, round, trial};
    }
    L *= beta;
  }
  throw BacktrackLimitError("no sufficient decrease after " + std::to_string(max_rounds) +
                            " backtracking rounds (last L = " + std::to_string(L / beta) + ")");
}

double update_gamma(double gamma, int backtracks_in_period, int r, double eta_down,
                    double eta_up) {
  if (backtracks_in_period == 0) return eta_down * gamma;
  if (backtracks_in_period > r) return eta_up * gamma;
  return gamma;
}

void advance_period(StepState& state, int n_backtracks, int r, double eta_down,
                    double eta_up) {
  state.backtracks_in_period += n_backtracks;
  state.iter_in_period += 1;
  if (state.iter_in_period >= r) {
    state.gamma_current = update_gamma(state.gamma_current, state.backtracks_in_period, r,
                                       eta_down, eta_up);
    state.backtracks_in_period = 0;
    state.iter_in_period = 0;
  }
}

StepState init_step_state(const StepStrategy& strategy, const Objective& obj, const Vector& x0,
                          const Vector& grad0, NormId p, std::uint64_t seed) {
  strategy.validate();
  StepState state;
  state.gamma_current = strategy.gamma0;
  state.prev_x = x0;
  state.prev_grad = grad0;
  switch (strategy.rule) {
    case StepRule::ShortStep:
      state.L_current = *strategy.global_L;
      return state;
    case StepRule::OpenLoop:
      return state;
    case StepRule::AdaptiveConstant:
    case StepRule::AdaptiveAdjustable:
    case StepRule::PureBacktracking:
      break;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector u(x0.size());
  do {
    for (Index i = 0; i < u.size(); ++i) u[i] = normal(rng);
  } while (u.norm() == 0.0);
  u.normalize();

  const Vector x_probe = x0 + kProbeDisplacement * u;
  const Vector g_probe = obj.gradient(x_probe);
  const auto estimate =
      estimate_local_lipschitz(grad0, g_probe, x0, x_probe, p, strategy.delta);
  state.L_current = estimate.value_or(1.0);
  state.prev_x = x_probe;
  state.prev_grad = g_probe;
  return state;
}

StepOutcome next_step(const StepStrategy& strategy, StepState& state, const Objective& obj,
                      const Vector& x, double fx, const Vector& grad, const Vector& d, NormId p,
                      double t_max, long k) {
  const double inner = grad.dot(d);
  StepOutcome out;
  switch (strategy.rule) {
    case StepRule::OpenLoop:
      out.t = std::min(open_loop_step(k), t_max);
      break;
    case StepRule::ShortStep:
      out.t = short_step(inner, *strategy.global_L, squared_norm(p, d), t_max);
      out.L_accepted = *strategy.global_L;
      break;
    case StepRule::PureBacktracking: {
      const double L_init = strategy.pb_decrease * state.L_current;
      out = backtrack(obj, x, fx, d, inner, p, t_max, L_init, strategy.beta);
      state.L_current = out.L_accepted;
      break;
    }
    case StepRule::AdaptiveConstant:
    case StepRule::AdaptiveAdjustable: {
      const double estimate =
          estimate_local_lipschitz(grad, state.prev_grad, x, state.prev_x, p, strategy.delta)
              .value_or(state.L_current + strategy.delta);
      const double gamma =
          strategy.rule == StepRule::AdaptiveConstant ? strategy.gamma0 : state.gamma_current;
      out = backtrack(obj, x, fx, d, inner, p, t_max, gamma * estimate, strategy.beta);
      state.L_current = out.L_accepted;
      if (strategy.rule == StepRule::AdaptiveAdjustable) {
        advance_period(state, out.n_backtracks, strategy.period, strategy.eta_down,
                       strategy.eta_up);
      }
      break;
    }
  }
  state.prev_x = x;
  state.prev_grad = grad;
  return out;
}

}  // namespace acgd
