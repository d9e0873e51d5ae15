#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "acgd/errors.hpp"

namespace acgd {

/// Dense real vector. Matrices are stored flattened in row-major order.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

enum class NormId { L1, L2, LInf };

/// l1 <-> linf, l2 is self-dual.
constexpr NormId dual(NormId p) noexcept {
  switch (p) {
    case NormId::L1:
      return NormId::LInf;
    case NormId::LInf:
      return NormId::L1;
    case NormId::L2:
      break;
  }
  return NormId::L2;
}

std::string_view to_string(NormId p) noexcept;
/// Accepts "l1", "l2", "linf" (case-insensitive). Throws ConfigError otherwise.
NormId parse_norm(std::string_view name);

double norm(NormId p, const Vector& x);
double dual_norm(NormId p, const Vector& x);

/// Throws DimensionError if any entry is NaN or infinite.
void require_finite(const Vector& x, std::string_view what);

/// Smooth objective f: R^n -> R with its gradient.
///
/// The callables must be pure. `value` throws NumericError when f returns
/// NaN; `gradient` throws NumericError on any non-finite entry. A value of
/// +inf is passed through so that line searches can reject the trial point.
class Objective {
public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradFn = std::function<Vector(const Vector&)>;

  Objective(std::string name, Index dim, ValueFn value_fn, GradFn grad_fn);

  const std::string& name() const noexcept { return name_; }
  Index dim() const noexcept { return dim_; }

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  std::optional<double> known_lipschitz;
  std::optional<double> known_optimum;

private:
  std::string name_;
  Index dim_;
  ValueFn value_fn_;
  GradFn grad_fn_;
};

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h for every coordinate.
Vector finite_diff_gradient(const Objective& obj, const Vector& x, double h);

}  // namespace acgd
