#include "acgd/problems.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace acgd {
namespace {

constexpr std::uint64_t kPowerSeed = 0x5eed;
constexpr double kPowerTol = 1e-10;
constexpr int kPowerMaxIter = 10000;

template <class Apply>
double power_lambda_max(Apply apply, Index n) {
  std::mt19937_64 rng(kPowerSeed);
  std::normal_distribution<double> z(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = z(rng);
  v.normalize();
  for (int it = 0; it < kPowerMaxIter; ++it) {
    const Vector w = apply(v);
    const double lambda = v.dot(w);
    if ((w - lambda * v).norm() <= kPowerTol * lambda) return lambda;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
  }
  throw NumericError("power iteration for the largest eigenvalue did not converge");
}

Matrix gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> z(0.0, 1.0);
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = z(rng);
  return a;
}

Vector gaussian_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> z(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = z(rng);
  return v;
}

void require_positive(Index n, const char* what) {
  if (n < 1) throw DimensionError(std::string(what) + " must be positive");
}

// Numerically stable log(1 + exp(t)).
double softplus(double t) { return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t))); }

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

Objective least_squares_objective(std::string name, const Matrix& A, const Vector& b) {
  return Objective(
      std::move(name), A.cols(), [A, b](const Vector& x) { return (b - A * x).squaredNorm(); },
      [A, b](const Vector& x) -> Vector { return -2.0 * A.transpose() * (b - A * x); });
}

void check_dataset(const SparseDataset& data) {
  if (data.rows < 1 || data.cols < 1) throw DataError("dataset is empty");
  if (data.labels.size() != data.rows || data.features.rows() != data.rows ||
      data.features.cols() != data.cols) {
    throw DimensionError("dataset shape is inconsistent");
  }
}

[[noreturn]] void bad_token(std::size_t line, const std::string& token, const char* why) {
  throw ParseError(line, "'" + token + "': " + why);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size() && std::isfinite(out);
}

}  // namespace

double rate_constant(double L, double beta, double delta, double max_grad, double D) {
  const double scale = std::max({beta * (L + delta), max_grad, 1.0});
  const double d = std::max(D, 1.0);
  return scale * d * d;
}

double lambda_max_gram(const Matrix& A) {
  if (A.rows() <= A.cols()) {
    return power_lambda_max([&A](const Vector& v) -> Vector { return A * (A.transpose() * v); },
                            A.rows());
  }
  return power_lambda_max([&A](const Vector& v) -> Vector { return A.transpose() * (A * v); },
                          A.cols());
}

double lambda_max_gram(const SparseMatrix& A) {
  if (A.rows() <= A.cols()) {
    return power_lambda_max([&A](const Vector& v) -> Vector { return A * (A.transpose() * v); },
                            A.rows());
  }
  return power_lambda_max([&A](const Vector& v) -> Vector { return A.transpose() * (A * v); },
                          A.cols());
}

ProblemInstance make_lasso(const SyntheticSpec& spec) {
  require_positive(spec.m, "m");
  require_positive(spec.n, "n");
  if (!(spec.tau > 0.0)) throw ConfigError("tau must be positive");
  std::mt19937_64 rng(spec.seed);
  const Matrix A = gaussian_matrix(spec.m, spec.n, rng);

  const Index k = std::clamp<Index>(static_cast<Index>(std::llround(spec.tau)), 1, spec.n);
  std::vector<Index> idx(static_cast<std::size_t>(spec.n));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  std::normal_distribution<double> z(0.0, 1.0);
  Vector x_true = Vector::Zero(spec.n);
  for (Index i = 0; i < k; ++i) x_true[idx[static_cast<std::size_t>(i)]] = z(rng);
  const double l1 = x_true.lpNorm<1>();
  if (l1 > spec.tau) x_true *= spec.tau / l1;
  const Vector b = A * x_true;

  Objective f = least_squares_objective("lasso", A, b);
  f.known_optimum = 0.0;
  f.known_lipschitz = 2.0 * lambda_max_gram(A);
  return ProblemInstance{std::move(f), Region::l1_ball(spec.n, spec.tau), Vector::Zero(spec.n),
                         x_true};
}

ProblemInstance make_matrix_balancing(Index n, double a, double b, double density,
                                      std::uint64_t seed) {
  require_positive(n, "n");
  if (!(0.0 < a && a < b)) throw ConfigError("matrix balancing needs 0 < a < b");
  if (!(density > 0.0)) throw ConfigError("density must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double p = std::min(1.0, density / static_cast<double>(n));
  Matrix S = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (unif(rng) < p) S(i, j) = unif(rng);
  const Matrix dense = (S + S.transpose()).cwiseAbs() + 0.05 * Matrix::Identity(n, n);
  const SparseMatrix A = dense.sparseView();
  const SparseMatrix At = A.transpose();

  Objective f(
      "matrix-balancing", n,
      [A](const Vector& x) {
        const Vector e = x.array().exp();
        const Vector einv = (-x.array()).exp();
        return e.dot(A * einv);
      },
      [A, At](const Vector& x) -> Vector {
        const Vector e = x.array().exp();
        const Vector einv = (-x.array()).exp();
        return e.cwiseProduct(A * einv) - einv.cwiseProduct(At * e);
      });
  // For symmetric A each pair contributes a_ij (e^t + e^-t) >= 2 a_ij, with
  // equality on constant vectors, so the optimum is the entry sum.
  f.known_optimum = dense.sum();
  const double off_diag = dense.sum() - dense.trace();
  f.known_lipschitz = std::max(2.0 * std::exp(b - a) * off_diag, 1e-12);

  Vector x0(n);
  std::uniform_real_distribution<double> box(a, b);
  for (Index i = 0; i < n; ++i) x0[i] = box(rng);
  return ProblemInstance{std::move(f),
                         Region::box(Vector::Constant(n, a), Vector::Constant(n, b)), x0, {}};
}

ProblemInstance make_logistic(const SparseDataset& data, double tau) {
  check_dataset(data);
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  for (Index i = 0; i < data.rows; ++i) {
    if (data.labels[i] != 1.0 && data.labels[i] != -1.0) {
      throw DataError("logistic regression needs labels in {-1, +1}; row " +
                      std::to_string(i + 1) + " has " + std::to_string(data.labels[i]));
    }
  }
  const SparseMatrix A = data.features;
  const Vector y = data.labels;
  const double m = static_cast<double>(data.rows);
  Objective f(
      "logistic", data.cols,
      [A, y, m](const Vector& x) {
        const Vector z = A * x;
        double s = 0.0;
        for (Index i = 0; i < z.size(); ++i) s += softplus(-y[i] * z[i]);
        return s / m;
      },
      [A, y, m](const Vector& x) -> Vector {
        const Vector z = A * x;
        Vector w(z.size());
        for (Index i = 0; i < z.size(); ++i) w[i] = -y[i] * sigmoid(-y[i] * z[i]) / m;
        return A.transpose() * w;
      });
  f.known_lipschitz = lambda_max_gram(A) / (4.0 * m);
  return ProblemInstance{std::move(f), Region::l1_ball(data.cols, tau), Vector::Zero(data.cols),
                         {}};
}

ProblemInstance make_sigmoid_ls(const SparseDataset& data, std::optional<double> tau) {
  check_dataset(data);
  if (tau && !(*tau > 0.0)) throw ConfigError("tau must be positive");
  const SparseMatrix A = data.features;
  const Vector y = data.labels.unaryExpr([](double v) { return v == -1.0 ? 0.0 : v; });
  const double m = static_cast<double>(data.rows);
  Objective f(
      "sigmoid-ls", data.cols,
      [A, y, m](const Vector& x) {
        const Vector z = A * x;
        double s = 0.0;
        for (Index i = 0; i < z.size(); ++i) {
          const double r = y[i] - sigmoid(z[i]);
          s += r * r;
        }
        return s / m;
      },
      [A, y, m](const Vector& x) -> Vector {
        const Vector z = A * x;
        Vector w(z.size());
        for (Index i = 0; i < z.size(); ++i) {
          const double s = sigmoid(z[i]);
          w[i] = -2.0 * (y[i] - s) * s * (1.0 - s) / m;
        }
        return A.transpose() * w;
      });
  // |d^2/dz^2 (y - s(z))^2| <= 2 max s'^2 + 2 max |s''| = 1/8 + 1/(3 sqrt 3) for y in [0, 1].
  if ((y.array() >= 0.0).all() && (y.array() <= 1.0).all()) {
    const double curvature = 0.125 + 1.0 / (3.0 * std::sqrt(3.0));
    f.known_lipschitz = curvature * lambda_max_gram(A) / m;
  }
  std::optional<Region> region;
  if (tau) region = Region::l1_ball(data.cols, *tau);
  return ProblemInstance{std::move(f), region, Vector::Zero(data.cols), {}};
}

ProblemInstance make_simplex_qp(const Matrix& Q_in) {
  if (Q_in.rows() != Q_in.cols() || Q_in.rows() < 1) {
    throw DimensionError("simplex QP needs a nonempty square matrix");
  }
  const Matrix Q = 0.5 * (Q_in + Q_in.transpose());
  const Index n = Q.rows();
  Objective f(
      "simplex-qp", n, [Q](const Vector& x) { return x.dot(Q * x); },
      [Q](const Vector& x) -> Vector { return 2.0 * (Q * x); });
  // Symmetric Q: sigma_max is the largest |eigenvalue|. The two ends of the
  // spectrum are often close in magnitude, which stalls power iteration on Q^T Q.
  const Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(Q, Eigen::EigenvaluesOnly).eigenvalues();
  f.known_lipschitz = 2.0 * ev.cwiseAbs().maxCoeff();
  return ProblemInstance{std::move(f), Region::simplex(n, 1.0),
                         Vector::Constant(n, 1.0 / static_cast<double>(n)), {}};
}

Matrix random_indefinite_matrix(Index n, std::uint64_t seed) {
  require_positive(n, "n");
  std::mt19937_64 rng(seed);
  const Matrix G = gaussian_matrix(n, n, rng);
  return 0.5 * (G + G.transpose());
}

ProblemInstance make_least_squares(const SyntheticSpec& spec, bool consistent) {
  require_positive(spec.m, "m");
  require_positive(spec.n, "n");
  std::mt19937_64 rng(spec.seed);
  const Matrix A = gaussian_matrix(spec.m, spec.n, rng);
  std::optional<Vector> x_true;
  Vector b;
  if (consistent) {
    x_true = gaussian_vector(spec.n, rng);
    b = A * *x_true;
  } else {
    b = gaussian_vector(spec.m, rng);
  }
  Objective f = least_squares_objective("least-squares", A, b);
  const Vector x_ls = A.completeOrthogonalDecomposition().solve(b);
  f.known_optimum = consistent ? 0.0 : (b - A * x_ls).squaredNorm();
  f.known_lipschitz = 2.0 * lambda_max_gram(A);
  return ProblemInstance{std::move(f), {}, Vector::Zero(spec.n), x_true};
}

ProblemInstance make_rosenbrock(Index n) {
  if (n < 2) throw DimensionError("rosenbrock needs n >= 2");
  Objective f(
      "rosenbrock", n,
      [](const Vector& x) {
        double s = 0.0;
        for (Index i = 0; i + 1 < x.size(); ++i) {
          const double a = x[i + 1] - x[i] * x[i];
          const double b = x[i] - 1.0;
          s += 100.0 * a * a + b * b;
        }
        return s;
      },
      [](const Vector& x) -> Vector {
        Vector g = Vector::Zero(x.size());
        for (Index i = 0; i + 1 < x.size(); ++i) {
          const double a = x[i + 1] - x[i] * x[i];
          g[i] += -400.0 * a * x[i] + 2.0 * (x[i] - 1.0);
          g[i + 1] += 200.0 * a;
        }
        return g;
      });
  f.known_optimum = 0.0;
  return ProblemInstance{std::move(f), {}, Vector::Zero(n), {}};
}

ProblemInstance make_levy(Index n) {
  if (n < 2) throw DimensionError("levy needs n >= 2");
  constexpr double pi = std::numbers::pi;
  Objective f(
      "levy", n,
      [](const Vector& x) {
        const Index n = x.size();
        const Vector w = 1.0 + (x.array() - 1.0) / 4.0;
        const double s1 = std::sin(pi * w[0]);
        double s = s1 * s1;
        for (Index i = 0; i + 1 < n; ++i) {
          const double si = std::sin(pi * w[i + 1]);
          s += (w[i] - 1.0) * (w[i] - 1.0) * (1.0 + 10.0 * si * si);
        }
        const double sn = std::sin(2.0 * pi * w[n - 1]);
        s += (w[n - 1] - 1.0) * (w[n - 1] - 1.0) * (1.0 + sn * sn);
        return s;
      },
      [](const Vector& x) -> Vector {
        const Index n = x.size();
        const Vector w = 1.0 + (x.array() - 1.0) / 4.0;
        Vector gw = Vector::Zero(n);
        gw[0] += pi * std::sin(2.0 * pi * w[0]);
        for (Index i = 0; i + 1 < n; ++i) {
          const double si = std::sin(pi * w[i + 1]);
          const double u = w[i] - 1.0;
          gw[i] += 2.0 * u * (1.0 + 10.0 * si * si);
          gw[i + 1] += u * u * 10.0 * pi * std::sin(2.0 * pi * w[i + 1]);
        }
        const double u = w[n - 1] - 1.0;
        const double sn = std::sin(2.0 * pi * w[n - 1]);
        gw[n - 1] += 2.0 * u * (1.0 + sn * sn) + u * u * 2.0 * pi * std::sin(4.0 * pi * w[n - 1]);
        return gw / 4.0;
      });
  f.known_optimum = 0.0;
  return ProblemInstance{std::move(f), {}, Vector::Zero(n), {}};
}

ProblemInstance make_zakharov(Index n) {
  if (n < 2) throw DimensionError("zakharov needs n >= 2");
  const Vector half_idx = Vector::LinSpaced(n, 1.0, static_cast<double>(n)) / 2.0;
  Objective f(
      "zakharov", n,
      [half_idx](const Vector& x) {
        const double s = half_idx.dot(x);
        const double s2 = s * s;
        return x.squaredNorm() + s2 + s2 * s2;
      },
      [half_idx](const Vector& x) -> Vector {
        const double s = half_idx.dot(x);
        return 2.0 * x + (2.0 * s + 4.0 * s * s * s) * half_idx;
      });
  f.known_optimum = 0.0;
  return ProblemInstance{std::move(f), {}, Vector::Ones(n), {}};
}

ProblemInstance make_sum_of_squares(Index n) {
  if (n < 2) throw DimensionError("sum-of-squares needs n >= 2");
  Objective f(
      "sum-of-squares", n,
      [](const Vector& x) {
        const double c = x[0] - 3.0;
        double s = c * c;
        double prefix = x[0];
        for (Index i = 1; i < x.size(); ++i) {
          prefix += x[i];
          const double r = c - 2.0 * prefix * prefix;
          s += r * r;
        }
        return s;
      },
      [](const Vector& x) -> Vector {
        const Index n = x.size();
        const double c = x[0] - 3.0;
        // r_i = c - 2 S_i^2 with S_i = x_1 + ... + x_i, i >= 2 (0-based i >= 1).
        // d r_i / d x_j = [j = 1] - 4 S_i [j <= i].
        Vector g = Vector::Zero(n);
        double prefix = x[0];
        std::vector<double> w(static_cast<std::size_t>(n), 0.0);
        double sum_r = 0.0;
        for (Index i = 1; i < n; ++i) {
          prefix += x[i];
          const double r = c - 2.0 * prefix * prefix;
          sum_r += 2.0 * r;
          w[static_cast<std::size_t>(i)] = 8.0 * r * prefix;
        }
        double suffix = 0.0;
        for (Index j = n - 1; j >= 0; --j) {
          if (j >= 1) suffix += w[static_cast<std::size_t>(j)];
          g[j] = -suffix;
        }
        g[0] += 2.0 * c + sum_r;
        return g;
      });
  return ProblemInstance{std::move(f), {}, Vector::Zero(n), {}};
}

double huber(double a, double rho) {
  const double abs_a = std::abs(a);
  return abs_a <= rho ? 0.5 * a * a : rho * (abs_a - 0.5 * rho);
}

double huber_derivative(double a, double rho) {
  if (std::abs(a) <= rho) return a;
  return a > 0.0 ? rho : -rho;
}

ProblemInstance make_huber_completion(Index m, Index n, double frac_observed, double rho,
                                      double tau, std::uint64_t seed) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (!(frac_observed > 0.0 && frac_observed <= 1.0)) {
    throw ConfigError("observed fraction must lie in (0, 1]");
  }
  if (!(rho > 0.0)) throw ConfigError("rho must be positive");
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  constexpr Index rank = 3;
  std::mt19937_64 rng(seed);
  const Matrix U = gaussian_matrix(m, rank, rng);
  const Matrix V = gaussian_matrix(n, rank, rng);
  const Matrix noise = gaussian_matrix(m, n, rng);
  const Matrix Y = U * V.transpose() / std::sqrt(static_cast<double>(rank)) + 0.1 * noise;

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Index> pos;
  std::vector<double> val;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (unif(rng) < frac_observed) {
        pos.push_back(i * n + j);
        val.push_back(Y(i, j));
      }
    }
  }
  if (pos.empty()) {
    pos.push_back(0);
    val.push_back(Y(0, 0));
  }
  const double count = static_cast<double>(pos.size());
  Objective f(
      "huber-completion", m * n,
      [pos, val, rho, count](const Vector& x) {
        double s = 0.0;
        for (std::size_t k = 0; k < pos.size(); ++k) s += huber(val[k] - x[pos[k]], rho);
        return s / count;
      },
      [pos, val, rho, count, dim = m * n](const Vector& x) -> Vector {
        Vector g = Vector::Zero(dim);
        for (std::size_t k = 0; k < pos.size(); ++k) {
          g[pos[k]] = -huber_derivative(val[k] - x[pos[k]], rho) / count;
        }
        return g;
      });
  f.known_lipschitz = 1.0 / count;
  return ProblemInstance{std::move(f), Region::nuclear_ball(m, n, tau), Vector::Zero(m * n), {}};
}

ProblemInstance make_strongly_convex_quadratic(Index n, double mu, double L, bool centered,
                                               std::uint64_t seed) {
  require_positive(n, "n");
  if (!(mu > 0.0 && mu <= L)) throw ConfigError("need 0 < mu <= L");
  std::mt19937_64 rng(seed);
  const Matrix G = gaussian_matrix(n, n, rng);
  const Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ();
  const Vector spectrum =
      n == 1 ? Vector::Constant(1, L) : Vector(Vector::LinSpaced(n, mu, L));
  Matrix H = Q * spectrum.asDiagonal() * Q.transpose();
  H = 0.5 * (H + H.transpose());
  const Vector x_star = centered ? Vector(Vector::Zero(n)) : gaussian_vector(n, rng);
  const Vector x0 = gaussian_vector(n, rng);
  Objective f(
      "quadratic", n,
      [H, x_star](const Vector& x) {
        const Vector r = x - x_star;
        return 0.5 * r.dot(H * r);
      },
      [H, x_star](const Vector& x) -> Vector { return H * (x - x_star); });
  f.known_lipschitz = L;
  f.known_optimum = 0.0;
  return ProblemInstance{std::move(f), {}, x0, x_star};
}

SparseDataset make_classification(Index m, Index n, double density, std::uint64_t seed) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (!(density > 0.0 && density <= 1.0)) throw ConfigError("density must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  const Vector w = gaussian_vector(n, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<Eigen::Triplet<double>> entries;
  SparseDataset data;
  data.rows = m;
  data.cols = n;
  data.labels.resize(m);
  for (Index i = 0; i < m; ++i) {
    double score = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (unif(rng) < density) {
        entries.emplace_back(i, j, 1.0);
        score += w[j];
      }
    }
    score += 0.5 * z(rng);
    data.labels[i] = score >= 0.0 ? 1.0 : -1.0;
  }
  data.features.resize(m, n);
  data.features.setFromTriplets(entries.begin(), entries.end());
  return data;
}

SparseDataset parse_libsvm(std::istream& in, std::optional<Index> n_features) {
  std::vector<Eigen::Triplet<double>> entries;
  std::vector<double> labels;
  Index max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;

    double label = 0.0;
    if (!parse_double(token, label)) {
      throw DataError("line " + std::to_string(line_no) + ": label '" + token +
                      "' is not a number");
    }
    const Index row = static_cast<Index>(labels.size());
    labels.push_back(label);

    long long prev = 0;
    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos || colon == 0) {
        bad_token(line_no, token, "expected index:value");
      }
      long long index = 0;
      const char* first = token.data();
      const char* last = token.data() + colon;
      const auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec != std::errc() || ptr != last) bad_token(line_no, token, "index is not an integer");
      if (index < 1) bad_token(line_no, token, "indices are 1-based");
      if (index == prev) bad_token(line_no, token, "duplicate index");
      if (index < prev) bad_token(line_no, token, "indices must be ascending");
      double value = 0.0;
      if (!parse_double(token.substr(colon + 1), value)) {
        bad_token(line_no, token, "value is not a finite number");
      }
      prev = index;
      max_index = std::max<Index>(max_index, static_cast<Index>(index));
      entries.emplace_back(row, static_cast<Index>(index - 1), value);
    }
  }

  Index cols = max_index;
  if (n_features) {
    if (*n_features < max_index) {
      throw DataError("feature index " + std::to_string(max_index) + " exceeds the requested " +
                      std::to_string(*n_features) + " features");
    }
    cols = *n_features;
  }
  SparseDataset data;
  data.rows = static_cast<Index>(labels.size());
  data.cols = cols;
  data.labels = Eigen::Map<const Vector>(labels.data(), data.rows);
  data.features.resize(data.rows, cols);
  data.features.setFromTriplets(entries.begin(), entries.end());
  return data;
}

SparseDataset load_libsvm(const std::string& path, std::optional<Index> n_features) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return parse_libsvm(in, n_features);
}

}  // namespace acgd
