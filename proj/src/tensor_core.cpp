#include <sym3inv/tensor_core.hpp>

#include <cmath>

namespace sym3 {

Orthogonal3<double> random_orthogonal(std::uint64_t seed, int det_sign) {
  if (det_sign != 1 && det_sign != -1) throw std::invalid_argument("det_sign must be +1 or -1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::array<std::array<double, 3>, 3> cols{};
  for (;;) {
    for (auto& col : cols)
      for (auto& x : col) x = normal(rng);
    // Modified Gram-Schmidt on the columns; dividing by the positive norm is
    // the column-sign convention (R has a positive diagonal).
    bool degenerate = false;
    for (int j = 0; j < 3 && !degenerate; ++j) {
      for (int k = 0; k < j; ++k) {
        double proj = 0.0;
        for (int i = 0; i < 3; ++i) proj += cols[k][i] * cols[j][i];
        for (int i = 0; i < 3; ++i) cols[j][i] -= proj * cols[k][i];
      }
      double norm = 0.0;
      for (int i = 0; i < 3; ++i) norm += cols[j][i] * cols[j][i];
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        degenerate = true;
        break;
      }
      for (int i = 0; i < 3; ++i) cols[j][i] /= norm;
    }
    if (!degenerate) break;
  }

  Orthogonal3<double>::Matrix q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i][j] = cols[j][i];
  Orthogonal3<double> result(q);
  const double det = result.determinant();
  if ((det > 0) != (det_sign > 0)) {
    for (int j = 0; j < 3; ++j) q[0][j] = -q[0][j];
    result = Orthogonal3<double>(q);
  }
  return result;
}

}  // namespace sym3
