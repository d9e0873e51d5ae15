#include "acgd/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

namespace acgd {

std::string_view to_string(NormId p) noexcept {
  switch (p) {
    case NormId::L1:
      return "l1";
    case NormId::L2:
      return "l2";
    case NormId::LInf:
      return "linf";
  }
  return "l2";
}

NormId parse_norm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "l1") return NormId::L1;
  if (lower == "l2") return NormId::L2;
  if (lower == "linf") return NormId::LInf;
  throw ConfigError("unknown norm '" + std::string(name) + "' (expected l1, l2, linf)");
}

double norm(NormId p, const Vector& x) {
  if (x.size() == 0) throw DimensionError("norm of an empty vector");
  switch (p) {
    case NormId::L1:
      return x.lpNorm<1>();
    case NormId::L2:
      return x.norm();
    case NormId::LInf:
      return x.lpNorm<Eigen::Infinity>();
  }
  return x.norm();
}

double dual_norm(NormId p, const Vector& x) { return norm(dual(p), x); }

void require_finite(const Vector& x, std::string_view what) {
  if (!x.allFinite()) throw DimensionError(std::string(what) + " has non-finite entries");
}

Objective::Objective(std::string name, Index dim, ValueFn value_fn, GradFn grad_fn)
    : name_(std::move(name)),
      dim_(dim),
      value_fn_(std::move(value_fn)),
      grad_fn_(std::move(grad_fn)) {
  if (dim_ < 1) throw DimensionError("objective dimension must be positive");
}

double Objective::value(const Vector& x) const {
  if (x.size() != dim_) {
    throw DimensionError(name_ + ": expected length " + std::to_string(dim_) + ", got " +
                         std::to_string(x.size()));
  }
  const double f = value_fn_(x);
  if (std::isnan(f)) throw NumericError(name_ + ": objective evaluated to NaN");
  return f;
}

Vector Objective::gradient(const Vector& x) const {
  if (x.size() != dim_) {
    throw DimensionError(name_ + ": expected length " + std::to_string(dim_) + ", got " +
                         std::to_string(x.size()));
  }
  Vector g = grad_fn_(x);
  if (g.size() != dim_) throw DimensionError(name_ + ": gradient has wrong length");
  if (!g.allFinite()) throw NumericError(name_ + ": gradient has non-finite entries");
  return g;
}

Vector finite_diff_gradient(const Objective& obj, const Vector& x, double h) {
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be positive");
  Vector g(x.size());
  Vector probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    probe[i] = xi + h;
    const double fp = obj.value(probe);
    probe[i] = xi - h;
    const double fm = obj.value(probe);
    probe[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace acgd
