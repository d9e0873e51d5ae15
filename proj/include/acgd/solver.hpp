#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "acgd/core.hpp"
#include "acgd/lmo.hpp"
#include "acgd/stepsize.hpp"

namespace acgd {

/// Constrained: Frank-Wolfe over the region, t_max = 1.
/// Unconstrained: normalized steepest descent along the LMO of a unit norm ball, t_max = inf.
enum class Mode { Constrained, Unconstrained };

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view name);
double t_max(Mode mode) noexcept;

/// Tolerance used for the start-point feasibility check.
inline constexpr double kFeasibilityTol = 1e-9;

struct SolverConfig {
  Mode mode = Mode::Constrained;
  Region region;
  StepStrategy strategy;
  NormId backtrack_norm = NormId::L2;
  double tol = 1e-5;
  long max_iter = 3000;
  std::uint64_t seed = 0;
  /// Stop on f(x) - known_optimum <= tol instead of the LMO gap.
  bool use_functional_gap = false;
};

struct TraceRow {
  long k = 0;
  double objective = 0.0;
  double gap = 0.0;
  double t = 0.0;
  double L_accepted = 0.0;
  int n_backtracks = 0;
  double gamma = 1.0;
  long grad_evals = 0;
  long fn_evals = 0;
};

enum class Status { Converged, MaxIterReached, Error };

std::string_view to_string(Status status) noexcept;

struct SolverResult {
  Vector final_x;
  Status status = Status::Error;
  std::vector<TraceRow> trace;
  /// Number of steps taken.
  long iterations = 0;
  double final_objective = 0.0;
  double final_gap = 0.0;
  long grad_evals = 0;
  long fn_evals = 0;
  /// Diagnostic for Status::Error.
  std::string error;
};

/// v for Unconstrained, v - x for Constrained.
Vector direction(Mode mode, const Vector& v, const Vector& x);

/// -<grad, d>.
double gap(Mode mode, const Vector& grad, const Vector& d);

/// Runs the conditional-gradient loop from x0.
///
/// Each trace row k holds f(x^k), Gap(x^k) and the step taken from x^k. A
/// converged run ends with a row whose step is 0 and whose iterate is final_x.
/// Throws InfeasibleStartError, DimensionError or ConfigError before iterating.
/// Failures inside the loop are reported as Status::Error with the partial trace.
SolverResult solve(const Objective& obj, const SolverConfig& config, const Vector& x0);

}  // namespace acgd
