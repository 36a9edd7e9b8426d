#pragma once

// Numerical check of the lower bound 2 I2 J2 - 3 J4 >= 0.2 over unit-norm
// (D, u). Multi-start local search plus random sampling: this certifies
// consistency with the reported minimum value, not global optimality.

#include <sym3inv/invariants.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace sym3::opt {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Coords7 = std::array<double, 7>;

inline constexpr double kFeasibilityTol = 1e-10;

/// Unit-norm pair: D_ijk D_ijk = 1 and u_i u_i = 1 (within 1e-10).
class FeasiblePoint {
 public:
  /// Throws std::invalid_argument if either norm is off by more than 1e-10.
  FeasiblePoint(const Traceless3Tensor<double>& deviator, const Vec3<double>& vector);

  /// Rescales nonzero inputs onto the unit spheres.
  static FeasiblePoint normalized(const Traceless3Tensor<double>& deviator, const Vec3<double>& vector);

  const Traceless3Tensor<double>& deviator() const { return deviator_; }
  const Vec3<double>& vector() const { return vector_; }

 private:
  Traceless3Tensor<double> deviator_;
  Vec3<double> vector_;
};

/// 2 I2 J2 - 3 J4 computed through the invariants module.
double objective(const FeasiblePoint& p);

struct SymmetricEigen {
  std::array<double, 3> values;  // descending
  Mat3 vectors;                  // column j is the eigenvector of values[j]
};

/// Cyclic Jacobi sweeps until the off-diagonal norm is below 1e-15 of the
/// Frobenius norm.
SymmetricEigen jacobi_eigen(const Mat3& m);

/// M(D)_kl = D_ijk D_ijl, so that J4 = u^T M(D) u.
Mat3 deviator_gram(const Traceless3Tensor<double>& d);

struct InnerSolution {
  Vec3<double> u;
  double value;  // 2 - 3 * lambda_max(M(D))
  double lambda_max;
  double gap;    // lambda_max - second eigenvalue
};

/// Best unit u for a fixed unit-norm D: the top eigenvector of M(D).
/// Throws std::invalid_argument unless I2(d) = 1 within 1e-10.
InnerSolution inner_solve_u(const Traceless3Tensor<double>& d);

/// The reduced problem over D alone, in coordinates y where I2 = |y|^2, so
/// the constraint set is the standard unit 7-sphere.
class ReducedProblem {
 public:
  ReducedProblem();

  Traceless3Tensor<double> to_deviator(const Coords7& y) const;
  Coords7 from_deviator(const Traceless3Tensor<double>& d) const;

  /// 2 - 3 lambda_max(M(D(y))) for unit y.
  double value(const Coords7& y) const;
  /// Sphere-projected gradient of value() at unit y.
  Coords7 gradient(const Coords7& y) const;

 private:
  Coords7 gradient_x(const Traceless3Tensor<double>& d, const Vec3<double>& u) const;

  // I2 = x^T G x for the seven stored components x; G = L L^T, y = L^T x.
  std::array<Coords7, 7> chol_;      // lower-triangular L
  std::array<Full3<double>, 7> unit_;  // expanded unit tensors, one per component
};

struct DescentOptions {
  int iterations = 500;
  double initial_step = 0.5;
  double shrink = 0.5;
  double armijo = 1e-4;
  double gradient_tol = 1e-9;
  double crossing_gap = 1e-8;
  double perturbation = 1e-4;
};

struct DescentResult {
  Coords7 y;
  double value;
  double gradient_norm;
  int iterations;
  int restarts;  // perturbations applied at near eigenvalue crossings
};

/// Projected gradient descent with Armijo backtracking and renormalization
/// as the retraction. `perturb_seed` keys the random perturbation used when
/// the top two eigenvalues of M(D) nearly cross.
DescentResult descend(const ReducedProblem& problem, Coords7 start, const DescentOptions& options,
                      std::uint64_t perturb_seed);

struct MinimizeResult {
  FeasiblePoint best;
  double value;
  double gradient_norm;
  std::size_t best_start;
  std::vector<double> start_values;  // final value per start
};

/// Multi-start descent; start s begins at a random unit y keyed by (seed, s).
/// Deterministic in seed.
MinimizeResult minimize(std::uint64_t seed, int starts, int iterations);

/// Smallest objective over `count` random unit (D, u) pairs.
double sample_minimum(std::uint64_t seed, std::size_t count);

/// The reported minimizer, rounded to four digits.
FeasiblePoint reported_minimizer();

}  // namespace sym3::opt
