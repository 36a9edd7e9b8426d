#include <sym3inv/optimizer.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace sym3::opt {

namespace {

double norm2(const Coords7& y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

Coords7 normalize(Coords7 y) {
  const double n = std::sqrt(norm2(y));
  if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  for (auto& v : y) v /= n;
  return y;
}

double deviator_norm2(const Traceless3Tensor<double>& d) {
  const Full3<double> full = expand(d);
  double s = 0.0;
  for (double v : full) s += v * v;
  return s;
}

double vector_norm2(const Vec3<double>& u) { return u[0] * u[0] + u[1] * u[1] + u[2] * u[2]; }

std::mt19937_64 keyed_rng(std::uint64_t seed, std::uint64_t key) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

FeasiblePoint::FeasiblePoint(const Traceless3Tensor<double>& deviator, const Vec3<double>& vector)
    : deviator_(deviator), vector_(vector) {
  if (std::abs(deviator_norm2(deviator_) - 1.0) > kFeasibilityTol)
    throw std::invalid_argument("deviator is not unit norm");
  if (std::abs(vector_norm2(vector_) - 1.0) > kFeasibilityTol)
    throw std::invalid_argument("vector is not unit norm");
}

FeasiblePoint FeasiblePoint::normalized(const Traceless3Tensor<double>& deviator, const Vec3<double>& vector) {
  const double dn = std::sqrt(deviator_norm2(deviator));
  const double un = std::sqrt(vector_norm2(vector));
  if (dn == 0.0 || un == 0.0) throw std::invalid_argument("cannot normalize a zero deviator or vector");
  Traceless3Tensor<double> d = deviator;
  for (auto& v : d.c) v /= dn;
  Vec3<double> u = vector;
  for (auto& v : u.e) v /= un;
  return FeasiblePoint(d, u);
}

double objective(const FeasiblePoint& p) {
  const auto inv = all_invariants(HarmonicParts<double>{p.deviator(), p.vector()});
  return 2.0 * inv[Inv::I2] * inv[Inv::J2] - 3.0 * inv[Inv::J4];
}

SymmetricEigen jacobi_eigen(const Mat3& m) {
  Mat3 a = m;
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;

  double frob = 0.0;
  for (const auto& row : a)
    for (double x : row) frob += x * x;
  const double tol = 1e-15 * std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    const double off = std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
    if (off <= tol) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });
  SymmetricEigen out{};
  for (int j = 0; j < 3; ++j) {
    out.values[j] = a[order[j]][order[j]];
    for (int i = 0; i < 3; ++i) out.vectors[i][j] = v[i][order[j]];
  }
  return out;
}

Mat3 deviator_gram(const Traceless3Tensor<double>& d) { return detail::deviator_gram(expand(d)); }

InnerSolution inner_solve_u(const Traceless3Tensor<double>& d) {
  if (std::abs(deviator_norm2(d) - 1.0) > kFeasibilityTol)
    throw std::invalid_argument("inner_solve_u requires a unit-norm deviator");
  const SymmetricEigen eig = jacobi_eigen(deviator_gram(d));
  InnerSolution s{};
  for (int i = 0; i < 3; ++i) s.u[i] = eig.vectors[i][0];
  s.lambda_max = eig.values[0];
  s.gap = eig.values[0] - eig.values[1];
  s.value = 2.0 - 3.0 * s.lambda_max;
  return s;
}

ReducedProblem::ReducedProblem() {
  for (int a = 0; a < 7; ++a) {
    Traceless3Tensor<double> e;
    e.c[a] = 1.0;
    unit_[a] = expand(e);
  }
  std::array<Coords7, 7> gram{};
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      double s = 0.0;
      for (int n = 0; n < 27; ++n) s += unit_[a][n] * unit_[b][n];
      gram[a][b] = s;
    }
  chol_ = {};
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = gram[i][j];
      for (int k = 0; k < j; ++k) s -= chol_[i][k] * chol_[j][k];
      chol_[i][j] = (i == j) ? std::sqrt(s) : s / chol_[j][j];
    }
  }
}

Traceless3Tensor<double> ReducedProblem::to_deviator(const Coords7& y) const {
  // Solve L^T x = y.
  Traceless3Tensor<double> d;
  for (int i = 6; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < 7; ++k) s -= chol_[k][i] * d.c[k];
    d.c[i] = s / chol_[i][i];
  }
  return d;
}

Coords7 ReducedProblem::from_deviator(const Traceless3Tensor<double>& d) const {
  Coords7 y{};
  for (int i = 0; i < 7; ++i) {
    double s = 0.0;
    for (int k = i; k < 7; ++k) s += chol_[k][i] * d.c[k];
    y[i] = s;
  }
  return y;
}

double ReducedProblem::value(const Coords7& y) const {
  const SymmetricEigen eig = jacobi_eigen(deviator_gram(to_deviator(y)));
  return 2.0 - 3.0 * eig.values[0];
}

Coords7 ReducedProblem::gradient_x(const Traceless3Tensor<double>& d, const Vec3<double>& u) const {
  // d lambda_max / d x_a = u^T (dM/dx_a) u = 2 (E_a)_ijk u_k D_ijl u_l
  const Full3<double> full = expand(d);
  std::array<double, 9> du{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) s += full[flat_index(i, j, l)] * u[l];
      du[3 * i + j] = s;
    }
  Coords7 g{};
  for (int a = 0; a < 7; ++a) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double eu = 0.0;
        for (int k = 0; k < 3; ++k) eu += unit_[a][flat_index(i, j, k)] * u[k];
        s += eu * du[3 * i + j];
      }
    g[a] = -3.0 * 2.0 * s;
  }
  return g;
}

Coords7 ReducedProblem::gradient(const Coords7& y) const {
  const Traceless3Tensor<double> d = to_deviator(y);
  const SymmetricEigen eig = jacobi_eigen(deviator_gram(d));
  Vec3<double> u;
  for (int i = 0; i < 3; ++i) u[i] = eig.vectors[i][0];
  const Coords7 gx = gradient_x(d, u);
  // x = L^{-T} y, so grad_y = L^{-1} grad_x (forward substitution).
  Coords7 gy{};
  for (int i = 0; i < 7; ++i) {
    double s = gx[i];
    for (int k = 0; k < i; ++k) s -= chol_[i][k] * gy[k];
    gy[i] = s / chol_[i][i];
  }
  double radial = 0.0;
  for (int i = 0; i < 7; ++i) radial += gy[i] * y[i];
  for (int i = 0; i < 7; ++i) gy[i] -= radial * y[i];
  return gy;
}

DescentResult descend(const ReducedProblem& problem, Coords7 start, const DescentOptions& options,
                      std::uint64_t perturb_seed) {
  std::mt19937_64 rng(perturb_seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  DescentResult r{};
  r.y = normalize(start);
  int it = 0;
  for (; it < options.iterations; ++it) {
    const SymmetricEigen eig = jacobi_eigen(deviator_gram(problem.to_deviator(r.y)));
    if (eig.values[0] - eig.values[1] < options.crossing_gap) {
      for (auto& v : r.y) v += options.perturbation * normal(rng);
      r.y = normalize(r.y);
      ++r.restarts;
      continue;
    }
    const double f0 = 2.0 - 3.0 * eig.values[0];
    const Coords7 g = problem.gradient(r.y);
    const double gn2 = norm2(g);
    if (std::sqrt(gn2) <= options.gradient_tol) break;

    double step = options.initial_step;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      Coords7 trial = r.y;
      for (int i = 0; i < 7; ++i) trial[i] -= step * g[i];
      trial = normalize(trial);
      if (problem.value(trial) <= f0 - options.armijo * step * gn2) {
        r.y = trial;
        accepted = true;
        break;
      }
      step *= options.shrink;
    }
    if (!accepted) break;  // no decrease representable in double precision
  }
  r.iterations = it;
  r.value = problem.value(r.y);
  r.gradient_norm = std::sqrt(norm2(problem.gradient(r.y)));
  return r;
}

MinimizeResult minimize(std::uint64_t seed, int starts, int iterations) {
  if (starts < 1 || iterations < 1) throw std::invalid_argument("starts and iterations must be >= 1");
  const ReducedProblem problem;
  DescentOptions options;
  options.iterations = iterations;

  std::vector<double> values(static_cast<std::size_t>(starts));
  DescentResult best{};
  best.value = std::numeric_limits<double>::infinity();
  std::size_t best_start = 0;
  for (int s = 0; s < starts; ++s) {
    auto rng = keyed_rng(seed, static_cast<std::uint64_t>(s));
    std::normal_distribution<double> normal(0.0, 1.0);
    Coords7 y0{};
    for (auto& v : y0) v = normal(rng);
    const DescentResult r = descend(problem, y0, options, rng());
    values[static_cast<std::size_t>(s)] = r.value;
    if (r.value < best.value) {
      best = r;
      best_start = static_cast<std::size_t>(s);
    }
  }

  const Traceless3Tensor<double> d = problem.to_deviator(best.y);
  const InnerSolution inner = inner_solve_u(d);
  return MinimizeResult{FeasiblePoint::normalized(d, inner.u), best.value, best.gradient_norm, best_start,
                        std::move(values)};
}

double sample_minimum(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < count; ++n) {
    Traceless3Tensor<double> d;
    for (auto& v : d.c) v = normal(rng);
    Vec3<double> u;
    for (auto& v : u.e) v = normal(rng);
    best = std::min(best, objective(FeasiblePoint::normalized(d, u)));
  }
  return best;
}

FeasiblePoint reported_minimizer() {
  Traceless3Tensor<double> d;
  d.c = {0.2829, 0.0, 0.0, -0.2828, -0.2450, 0.0, -0.2828};
  const Vec3<double> u{{-0.4471, -0.7746, -0.4474}};
  return FeasiblePoint::normalized(d, u);
}

}  // namespace sym3::opt
