#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

#include "acgd/core.hpp"

namespace acgd {

enum class StepRule { AdaptiveConstant, AdaptiveAdjustable, PureBacktracking, ShortStep, OpenLoop };

std::string_view to_string(StepRule rule) noexcept;
/// Accepts the CLI spellings: adaptive-constant, adaptive-adjustable,
/// pure-backtracking, short-step, open-loop. Throws ConfigError otherwise.
StepRule parse_step_rule(std::string_view name);
/// Comma-separated list of valid CLI spellings, for diagnostics.
std::string_view step_rule_names() noexcept;

inline constexpr int kMaxBacktrackRounds = 100;
inline constexpr double kGammaDecrease = 0.9;
inline constexpr double kGammaIncrease = 1.1;
/// Displacement used to synthesize x^{-1} before the first iteration.
inline constexpr double kProbeDisplacement = 1e-6;
/// Relative size of f below which backtrack treats the sufficient-decrease test as noise.
inline constexpr double kRoundingSlack = 2.0 * std::numeric_limits<double>::epsilon();

struct StepStrategy {
  StepRule rule = StepRule::AdaptiveAdjustable;
  double gamma0 = 0.25;
  double delta = 1e-10;
  double beta = 2.0;
  int period = 10;
  double eta_down = kGammaDecrease;
  double eta_up = kGammaIncrease;
  double pb_decrease = 0.9;
  /// Global Lipschitz constant, required by ShortStep.
  std::optional<double> global_L;

  /// Throws ConfigError on out-of-range parameters.
  void validate() const;
};

/// Mutable per-solve state of a step rule.
struct StepState {
  double L_current = 1.0;
  double gamma_current = 0.25;
  int backtracks_in_period = 0;
  int iter_in_period = 0;
  Vector prev_x;
  Vector prev_grad;
};

struct StepOutcome {
  double t = 0.0;
  double L_accepted = 0.0;
  int n_backtracks = 0;
  /// f(x + t d) when the rule evaluated it during the sufficient-decrease test.
  std::optional<double> trial_value;
};

/// ||g_k - g_{k-1}||_* / ||x_k - x_{k-1}|| + delta, or nullopt when the
/// displacement is zero (the caller reuses its previous estimate).
std::optional<double> estimate_local_lipschitz(const Vector& grad_k, const Vector& grad_km1,
                                               const Vector& x_k, const Vector& x_km1, NormId p,
                                               double delta);

/// min(-inner / (L ||d||^2), t_max), clamped below at 0.
double candidate_step(double inner, double L, double d_norm_sq, double t_max);

/// Same formula as candidate_step with a known global constant.
double short_step(double inner, double L, double d_norm_sq, double t_max);

double open_loop_step(long k);

/// f(x + t d) <= f(x) + t <grad f(x), d> + (L/2) t^2 ||d||_p^2.
bool sufficient_decrease(const Objective& obj, const Vector& x, const Vector& d, double t,
                         double L, NormId p);

/// Variant reusing f(x) and <grad f(x), d>. Reports f(x + t d) through trial_value.
bool sufficient_decrease(const Objective& obj, const Vector& x, double fx, const Vector& d,
                         double inner, double t, double L, NormId p,
                         double* trial_value = nullptr);

/// Tries L_init, beta L_init, beta^2 L_init, ... until sufficient decrease holds.
/// At most max_rounds trial points are evaluated before BacktrackLimitError. A
/// trial is also accepted when both the predicted decrease and f(trial) - f(x) are
/// within kRoundingSlack |f(x)|.
StepOutcome backtrack(const Objective& obj, const Vector& x, double fx, const Vector& d,
                      double inner, NormId p, double t_max, double L_init, double beta,
                      int max_rounds = kMaxBacktrackRounds);

/// Period update of the scaling factor: eta_down gamma with no backtracking,
/// eta_up gamma when backtracking exceeded r steps, unchanged otherwise.
double update_gamma(double gamma, int backtracks_in_period, int r,
                    double eta_down = kGammaDecrease, double eta_up = kGammaIncrease);

/// Records one iteration's backtrack count; applies update_gamma at the end of
/// each r-iteration period and resets the period counters.
void advance_period(StepState& state, int n_backtracks, int r,
                    double eta_down = kGammaDecrease, double eta_up = kGammaIncrease);

/// Builds the initial state. Adaptive and backtracking rules evaluate one
/// extra gradient at x0 + eps u (u a seeded random unit vector) to stand in
/// for the missing previous iterate.
StepState init_step_state(const StepStrategy& strategy, const Objective& obj, const Vector& x0,
                          const Vector& grad0, NormId p, std::uint64_t seed);

/// One step of the configured rule from x along d. Updates state in place.
StepOutcome next_step(const StepStrategy& strategy, StepState& state, const Objective& obj,
                      const Vector& x, double fx, const Vector& grad, const Vector& d, NormId p,
                      double t_max, long k);

}  // namespace acgd
