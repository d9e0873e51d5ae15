#pragma once

#include <Eigen/SparseCore>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "acgd/core.hpp"
#include "acgd/lmo.hpp"

namespace acgd {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct SyntheticSpec {
  Index m = 200;
  Index n = 1000;
  double tau = 10.0;
  std::uint64_t seed = 0;
  std::optional<double> density;
};

/// Rows of (feature index, value) pairs with one label per row.
struct SparseDataset {
  Index rows = 0;
  Index cols = 0;
  SparseMatrix features;
  Vector labels;
};

/// Constants appearing in the convergence-rate bounds. Any of them may be unknown.
struct RateBound {
  std::optional<double> L;
  std::optional<double> mu;
  std::optional<double> eta;
  std::optional<double> D;
  std::optional<double> R;
  std::optional<double> zeta;
  std::optional<double> C;
  /// max ||grad f|| over the feasible set (needed for C).
  std::optional<double> max_grad;
};

/// max{beta (L + delta), max_grad, 1} * max{D, 1}^2.
double rate_constant(double L, double beta, double delta, double max_grad, double D);

/// A ready-to-solve benchmark: objective, optional feasible region and start point.
struct ProblemInstance {
  Objective objective;
  std::optional<Region> region;
  Vector x0;
  /// Planted solution for synthetic instances that have one.
  std::optional<Vector> x_true;
};

/// Largest eigenvalue of A^T A by seeded power iteration (tol 1e-10, <= 10 000 iterations).
double lambda_max_gram(const Matrix& A);
double lambda_max_gram(const SparseMatrix& A);

/// ||b - A x||^2 over the l1 ball of radius tau. A is Gaussian, x_true has
/// round(tau) Gaussian nonzeros, b = A x_true, so the optimum is 0.
/// x_true is scaled onto the ball boundary if its l1 norm would exceed tau. x0 = 0.
ProblemInstance make_lasso(const SyntheticSpec& spec);

/// sum_ij a_ij exp(x_i - x_j) over [a, b]^n with A = |S + S^T| + 0.05 I and S a
/// uniform sparse matrix of density d/n. Start point is seeded uniform in the box.
ProblemInstance make_matrix_balancing(Index n, double a, double b, double density,
                                      std::uint64_t seed);

/// Mean logistic loss over the l1 ball of radius tau; labels must be +-1. x0 = 0.
ProblemInstance make_logistic(const SparseDataset& data, double tau);

/// Mean squared sigmoid residual. Labels equal to -1 are mapped to 0.
/// l1-ball constrained when tau is given. x0 = 0.
ProblemInstance make_sigmoid_ls(const SparseDataset& data, std::optional<double> tau);

/// x^T Q x over the unit simplex, started at the centroid. Q is symmetrized.
ProblemInstance make_simplex_qp(const Matrix& Q);
/// Symmetric Gaussian matrix (G + G^T) / 2, indefinite with high probability.
Matrix random_indefinite_matrix(Index n, std::uint64_t seed);

/// Unconstrained ||b - A x||^2 with Gaussian A. b = A x_true when consistent,
/// otherwise an independent Gaussian vector. known_optimum from a dense QR solve.
ProblemInstance make_least_squares(const SyntheticSpec& spec, bool consistent);

/// Unconstrained benchmark functions.
ProblemInstance make_rosenbrock(Index n);
ProblemInstance make_levy(Index n);
ProblemInstance make_zakharov(Index n);
ProblemInstance make_sum_of_squares(Index n);

/// Mean Huber loss of (Y - X) over observed entries, nuclear ball of radius tau.
/// Y is a seeded rank-3 matrix plus noise; each entry is observed with
/// probability frac_observed. X is flattened row-major, x0 = 0.
ProblemInstance make_huber_completion(Index m, Index n, double frac_observed, double rho,
                                      double tau, std::uint64_t seed);
double huber(double a, double rho);
double huber_derivative(double a, double rho);

/// 1/2 (x - x*)^T H (x - x*) with spectrum evenly spaced in [mu, L] and a seeded
/// random eigenbasis. x* = 0 when centered, else seeded Gaussian. x0 seeded Gaussian.
ProblemInstance make_strongly_convex_quadratic(Index n, double mu, double L, bool centered,
                                               std::uint64_t seed);

/// Sparse binary features with labels from a seeded linear model, in the style of a1a.
SparseDataset make_classification(Index m, Index n, double density, std::uint64_t seed);

/// Reads "label idx:val idx:val ..." lines with 1-based strictly ascending indices.
/// Blank lines are skipped. The feature count is the largest index seen unless
/// n_features is given. Throws ParseError (with the line number) on malformed
/// lines and DataError on non-numeric labels.
SparseDataset load_libsvm(const std::string& path, std::optional<Index> n_features = {});
SparseDataset parse_libsvm(std::istream& in, std::optional<Index> n_features = {});

}  // namespace acgd
