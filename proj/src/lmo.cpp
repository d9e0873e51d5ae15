#include "acgd/lmo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

namespace acgd {
namespace {

constexpr std::uint64_t kPowerIterationSeed = 0x5eedULL;
constexpr Index kMaxEnumeratedCorners = 20;

double sign(double a) { return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0); }

void require_dim(const Region& region, const Vector& x) {
  if (x.size() != region.dim) {
    throw DimensionError(std::string(to_string(region.kind)) + ": expected length " +
                         std::to_string(region.dim) + ", got " + std::to_string(x.size()));
  }
}

void require_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("region scale tau must be positive");
}

// Lowest index among maximizers of |x_i|.
Index argmax_abs(const Vector& x) {
  Index best = 0;
  for (Index i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  }
  return best;
}

Index argmin(const Vector& x) {
  Index best = 0;
  for (Index i = 1; i < x.size(); ++i) {
    if (x[i] < x[best]) best = i;
  }
  return best;
}

Vector box_lmo(const Vector& lower, const Vector& upper, const Vector& x) {
  Vector v(x.size());
  for (Index i = 0; i < x.size(); ++i) v[i] = x[i] < 0.0 ? upper[i] : lower[i];
  return v;
}

// Minimum of <x, v> over the corners of [lower, upper]; enumerates corners for
// small dimensions and minimizes coordinate by coordinate otherwise.
double box_corner_minimum(const Vector& lower, const Vector& upper, const Vector& x) {
  const Index n = x.size();
  if (n <= kMaxEnumeratedCorners) {
    double best = std::numeric_limits<double>::infinity();
    const std::uint64_t corners = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < corners; ++mask) {
      double s = 0.0;
      for (Index i = 0; i < n; ++i) s += x[i] * (((mask >> i) & 1U) ? upper[i] : lower[i]);
      best = std::min(best, s);
    }
    return best;
  }
  double s = 0.0;
  for (Index i = 0; i < n; ++i) s += std::min(x[i] * lower[i], x[i] * upper[i]);
  return s;
}

Vector gaussian_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

Eigen::VectorXd singular_values(const Vector& flat, Index rows, Index cols) {
  Eigen::JacobiSVD<Matrix> svd(as_matrix(flat, rows, cols));
  return svd.singularValues();
}

}  // namespace

std::string_view to_string(RegionKind kind) noexcept {
  switch (kind) {
    case RegionKind::L2Ball:
      return "l2-ball";
    case RegionKind::L1Ball:
      return "l1-ball";
    case RegionKind::LInfBall:
      return "linf-ball";
    case RegionKind::Simplex:
      return "simplex";
    case RegionKind::Box:
      return "box";
    case RegionKind::NuclearBall:
      return "nuclear-ball";
    case RegionKind::SpectralBall:
      return "spectral-ball";
  }
  return "unknown";
}

Region Region::l2_ball(Index n, double tau) {
  require_tau(tau);
  if (n < 1) throw DimensionError("region dimension must be positive");
  return Region{RegionKind::L2Ball, tau, n, {}, {}, 0, 0};
}

Region Region::l1_ball(Index n, double tau) {
  Region r = l2_ball(n, tau);
  r.kind = RegionKind::L1Ball;
  return r;
}

Region Region::linf_ball(Index n, double tau) {
  Region r = l2_ball(n, tau);
  r.kind = RegionKind::LInfBall;
  return r;
}

Region Region::simplex(Index n, double tau) {
  Region r = l2_ball(n, tau);
  r.kind = RegionKind::Simplex;
  return r;
}

Region Region::box(Vector lower, Vector upper) {
  if (lower.size() < 1 || lower.size() != upper.size()) {
    throw DimensionError("box bounds must be nonempty and of equal length");
  }
  require_finite(lower, "box lower bound");
  require_finite(upper, "box upper bound");
  if ((lower.array() > upper.array()).any()) throw ConfigError("box has lower > upper");
  const Index n = lower.size();
  return Region{RegionKind::Box, 1.0, n, std::move(lower), std::move(upper), 0, 0};
}

Region Region::symmetric_box(const Vector& l, const Vector& u) { return box(-l, u); }

Region Region::nuclear_ball(Index rows, Index cols, double tau) {
  require_tau(tau);
  if (rows < 1 || cols < 1) throw DimensionError("matrix region needs positive rows and cols");
  return Region{RegionKind::NuclearBall, tau, rows * cols, {}, {}, rows, cols};
}

Region Region::spectral_ball(Index rows, Index cols, double tau) {
  Region r = nuclear_ball(rows, cols, tau);
  r.kind = RegionKind::SpectralBall;
  return r;
}

Region Region::norm_ball(NormId p, Index n, double tau) {
  switch (p) {
    case NormId::L1:
      return l1_ball(n, tau);
    case NormId::LInf:
      return linf_ball(n, tau);
    case NormId::L2:
      break;
  }
  return l2_ball(n, tau);
}

Matrix as_matrix(const Vector& flat, Index rows, Index cols) {
  if (flat.size() != rows * cols) throw DimensionError("flattened matrix has wrong length");
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      flat.data(), rows, cols);
}

Vector flatten(const Matrix& m) {
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  return Eigen::Map<const Vector>(rm.data(), rm.size());
}

Vector lmo(const Region& region, const Vector& x) {
  require_dim(region, x);
  const double tau = region.tau;
  switch (region.kind) {
    case RegionKind::L2Ball: {
      const double nx = x.norm();
      if (nx == 0.0) return Vector::Zero(x.size());
      return -tau * x / nx;
    }
    case RegionKind::L1Ball: {
      // At x = 0 every feasible point is a minimizer; return the first vertex +tau e_0.
      const Index j = argmax_abs(x);
      Vector v = Vector::Zero(x.size());
      v[j] = x[j] == 0.0 ? tau : -tau * sign(x[j]);
      return v;
    }
    case RegionKind::Simplex: {
      Vector v = Vector::Zero(x.size());
      v[argmin(x)] = tau;
      return v;
    }
    case RegionKind::LInfBall:
      return x.unaryExpr([tau](double a) { return -tau * sign(a); });
    case RegionKind::Box:
      return box_lmo(region.lower, region.upper, x);
    case RegionKind::NuclearBall: {
      try {
        const SingularPair top = top_singular_pair(x, region.rows, region.cols);
        if (top.sigma == 0.0) return Vector::Zero(x.size());
        return flatten(-tau * top.u * top.v.transpose());
      } catch (const NumericError&) {
        // Nearly tied top singular values stall power iteration; use a dense SVD instead.
        Eigen::JacobiSVD<Matrix> svd(as_matrix(x, region.rows, region.cols),
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.singularValues()(0) == 0.0) return Vector::Zero(x.size());
        return flatten(-tau * svd.matrixU().col(0) * svd.matrixV().col(0).transpose());
      }
    }
    case RegionKind::SpectralBall: {
      Eigen::JacobiSVD<Matrix> svd(as_matrix(x, region.rows, region.cols),
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
      return flatten(-tau * svd.matrixU() * svd.matrixV().transpose());
    }
  }
  throw CapabilityError("unsupported region");
}

SingularPair top_singular_pair(const Matrix& x, double tol, int max_iter) {
  if (!(tol > 0.0)) throw ConfigError("power iteration tolerance must be positive");
  if (max_iter < 1) throw ConfigError("power iteration needs at least one iteration");
  const Index rows = x.rows();
  const Index cols = x.cols();

  SingularPair out;
  if (x.cwiseAbs().maxCoeff() == 0.0) {
    out.u = Vector::Unit(rows, 0);
    out.v = Vector::Unit(cols, 0);
    return out;
  }

  std::mt19937_64 rng(kPowerIterationSeed);
  Vector v = gaussian_vector(cols, rng);
  v.normalize();
  double lambda = 0.0;
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    const Vector w = x.transpose() * (x * v);
    lambda = v.dot(w);
    const double wn = w.norm();
    if (wn == 0.0) {
      // Start vector in the null space; restart from a fresh direction.
      v = gaussian_vector(cols, rng);
      v.normalize();
      continue;
    }
    // Eigen-residual test: a small residual bounds both the eigenvalue error
    // and the objective value <X, u v^T> even when the top pair is nearly degenerate.
    if ((w - lambda * v).norm() <= tol * lambda) {
      converged = true;
      break;
    }
    v = w / wn;
  }
  if (!converged) {
    throw NumericError("power iteration did not converge in " + std::to_string(max_iter) +
                       " iterations");
  }
  Vector xv = x * v;
  out.sigma = xv.norm();
  out.v = v;
  out.u = out.sigma > 0.0 ? Vector(xv / out.sigma) : Vector(Vector::Unit(rows, 0));
  return out;
}

SingularPair top_singular_pair(const Vector& flat, Index rows, Index cols, double tol,
                               int max_iter) {
  return top_singular_pair(as_matrix(flat, rows, cols), tol, max_iter);
}

double brute_force_lmo(const Region& region, const Vector& x, int n_samples, std::uint64_t seed) {
  require_dim(region, x);
  const double tau = region.tau;
  const Index n = x.size();
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  switch (region.kind) {
    case RegionKind::L1Ball:
      for (Index i = 0; i < n; ++i) best = std::min({best, tau * x[i], -tau * x[i]});
      return best;
    case RegionKind::Simplex:
      for (Index i = 0; i < n; ++i) best = std::min(best, tau * x[i]);
      return best;
    case RegionKind::LInfBall:
      return box_corner_minimum(Vector::Constant(n, -tau), Vector::Constant(n, tau), x);
    case RegionKind::Box:
      return box_corner_minimum(region.lower, region.upper, x);
    case RegionKind::L2Ball:
      for (Index i = 0; i < n; ++i) best = std::min({best, tau * x[i], -tau * x[i]});
      for (int s = 0; s < n_samples; ++s) {
        Vector p = gaussian_vector(n, rng);
        const double pn = p.norm();
        if (pn == 0.0) continue;
        best = std::min(best, tau * x.dot(p) / pn);
      }
      return std::min(best, 0.0);
    case RegionKind::NuclearBall:
    case RegionKind::SpectralBall: {
      const Matrix xm = as_matrix(x, region.rows, region.cols);
      // Coordinate atoms e_i e_j^T lie in both balls (all singular values are 0 or 1).
      best = -tau * xm.cwiseAbs().maxCoeff();
      if (region.kind == RegionKind::SpectralBall) {
        // Signed diagonals are partial isometries.
        const Index k = std::min(region.rows, region.cols);
        double diag_best = 0.0;
        for (Index i = 0; i < k; ++i) diag_best -= tau * std::abs(xm(i, i));
        best = std::min(best, diag_best);
      }
      for (int s = 0; s < n_samples; ++s) {
        if (region.kind == RegionKind::NuclearBall) {
          Vector u = gaussian_vector(region.rows, rng);
          Vector w = gaussian_vector(region.cols, rng);
          if (u.norm() == 0.0 || w.norm() == 0.0) continue;
          u.normalize();
          w.normalize();
          best = std::min(best, tau * u.dot(xm * w));
        } else {
          // ||G||_op <= ||G||_F, so tau G / ||G||_F is feasible.
          Vector g = gaussian_vector(n, rng);
          const double gn = g.norm();
          if (gn == 0.0) continue;
          best = std::min(best, tau * x.dot(g) / gn);
        }
      }
      return std::min(best, 0.0);
    }
  }
  throw CapabilityError("unsupported region");
}

double diameter(const Region& region, NormId p) {
  const double tau = region.tau;
  const double n = static_cast<double>(region.dim);
  switch (region.kind) {
    case RegionKind::L2Ball:
      switch (p) {
        case NormId::L1:
          return 2.0 * tau * std::sqrt(n);
        case NormId::L2:
        case NormId::LInf:
          return 2.0 * tau;
      }
      break;
    case RegionKind::L1Ball:
      return 2.0 * tau;
    case RegionKind::LInfBall:
      switch (p) {
        case NormId::L1:
          return 2.0 * tau * n;
        case NormId::L2:
          return 2.0 * tau * std::sqrt(n);
        case NormId::LInf:
          return 2.0 * tau;
      }
      break;
    case RegionKind::Simplex:
      if (region.dim == 1) return 0.0;
      switch (p) {
        case NormId::L1:
          return 2.0 * tau;
        case NormId::L2:
          return std::sqrt(2.0) * tau;
        case NormId::LInf:
          return tau;
      }
      break;
    case RegionKind::Box:
      return norm(p, region.upper - region.lower);
    case RegionKind::NuclearBall:
      if (p == NormId::L2) return 2.0 * tau;
      break;
    case RegionKind::SpectralBall:
      if (p == NormId::L2) {
        return 2.0 * tau * std::sqrt(static_cast<double>(std::min(region.rows, region.cols)));
      }
      break;
  }
  throw CapabilityError("diameter of " + std::string(to_string(region.kind)) + " in " +
                        std::string(to_string(p)) + " is not supported");
}

double feasibility_violation(const Region& region, const Vector& v) {
  require_dim(region, v);
  const double tau = region.tau;
  switch (region.kind) {
    case RegionKind::L2Ball:
      return std::max(0.0, v.norm() - tau);
    case RegionKind::L1Ball:
      return std::max(0.0, v.lpNorm<1>() - tau);
    case RegionKind::LInfBall:
      return std::max(0.0, v.lpNorm<Eigen::Infinity>() - tau);
    case RegionKind::Simplex:
      return std::max({0.0, -v.minCoeff(), std::abs(v.sum() - tau)});
    case RegionKind::Box:
      return std::max({0.0, (region.lower - v).maxCoeff(), (v - region.upper).maxCoeff()});
    case RegionKind::NuclearBall:
      return std::max(0.0, singular_values(v, region.rows, region.cols).sum() - tau);
    case RegionKind::SpectralBall:
      return std::max(0.0, singular_values(v, region.rows, region.cols).maxCoeff() - tau);
  }
  throw CapabilityError("unsupported region");
}

}  // namespace acgd
