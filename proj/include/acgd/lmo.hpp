#pragma once

#include <cstdint>
#include <string_view>

#include "acgd/core.hpp"

namespace acgd {

enum class RegionKind { L2Ball, L1Ball, LInfBall, Simplex, Box, NuclearBall, SpectralBall };

std::string_view to_string(RegionKind kind) noexcept;

/// Compact convex feasible set with a closed-form linear minimization oracle.
///
/// Boxes are stored as per-coordinate intervals lower_i <= v_i <= upper_i.
/// The table form {-l <= v <= u} maps to lower = -l, upper = u. Matrix balls
/// act on row-major flattened rows x cols matrices.
struct Region {
  RegionKind kind = RegionKind::L2Ball;
  double tau = 1.0;
  Index dim = 0;
  Vector lower;
  Vector upper;
  Index rows = 0;
  Index cols = 0;

  static Region l2_ball(Index n, double tau);
  static Region l1_ball(Index n, double tau);
  static Region linf_ball(Index n, double tau);
  static Region simplex(Index n, double tau);
  /// Interval box lower <= v <= upper.
  static Region box(Vector lower, Vector upper);
  /// Box {-l <= v <= u}.
  static Region symmetric_box(const Vector& l, const Vector& u);
  static Region nuclear_ball(Index rows, Index cols, double tau);
  static Region spectral_ball(Index rows, Index cols, double tau);
  /// Unit-radius-tau ball of the given vector norm.
  static Region norm_ball(NormId p, Index n, double tau);

  bool is_matrix() const noexcept {
    return kind == RegionKind::NuclearBall || kind == RegionKind::SpectralBall;
  }
};

struct SingularPair {
  double sigma = 0.0;
  Vector u;
  Vector v;
};

/// View a row-major flattened vector as a rows x cols matrix.
Matrix as_matrix(const Vector& flat, Index rows, Index cols);
Vector flatten(const Matrix& m);

/// argmin over the region of <x, v>. Ties break toward the lowest index.
Vector lmo(const Region& region, const Vector& x);

/// Largest singular triple by power iteration on X^T X from a fixed seeded
/// start. Converges when ||X^T X v - lambda v|| <= tol * lambda.
/// Throws NumericError after max_iter iterations.
SingularPair top_singular_pair(const Matrix& x, double tol = 1e-10, int max_iter = 10000);
SingularPair top_singular_pair(const Vector& flat, Index rows, Index cols, double tol = 1e-10,
                               int max_iter = 10000);

/// Reference minimum of <x, v> over the region, independent of lmo().
/// Polytopes enumerate their vertices. Balls without finite vertex sets use a
/// coordinate-atom candidate set plus n_samples seeded feasible points.
double brute_force_lmo(const Region& region, const Vector& x, int n_samples, std::uint64_t seed);

/// Exact diameter max ||x - y||_p. Matrix balls support only the Frobenius
/// (flattened l2) norm; other combinations throw CapabilityError.
double diameter(const Region& region, NormId p);

/// Amount by which v violates the region's defining constraints (0 if inside).
double feasibility_violation(const Region& region, const Vector& v);

}  // namespace acgd
