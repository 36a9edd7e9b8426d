#include <sym3inv/exact_algebra.hpp>

#include <algorithm>
#include <stdexcept>

namespace sym3 {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("entry count does not match rows * cols");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactVector RationalMatrix::apply(std::span<const ExactScalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    ExactScalar s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(x[c]) != 0) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const ExactScalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
  RationalMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

namespace {

// Row scaled to coprime integers; nullspace is unchanged by row scaling.
std::vector<mpz_class> integer_row(std::span<const ExactScalar> row) {
  mpz_class lcm_den = 1;
  for (const auto& q : row) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out(row.size());
  mpz_class content = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (lcm_den / row[j].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[j].get_mpz_t());
  }
  if (content > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return out;
}

}  // namespace

FractionFreeEchelon fraction_free_echelon(const RationalMatrix& m) {
  FractionFreeEchelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  e.rows.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) e.rows.push_back(integer_row(m.row(r)));

  mpz_class prev = 1;
  mpz_class t1, t2;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && e.rows[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(e.rows[p], e.rows[pivot_row]);
    const auto& prow = e.rows[pivot_row];
    const mpz_class piv = prow[c];

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      auto& row = e.rows[i];
      const mpz_class f = row[c];
      // Rows below the pivot row are zero left of column c.
      const std::size_t start = i > pivot_row ? c : 0;
      if (i > pivot_row && f == 0) {
        for (std::size_t j = start; j < cols; ++j) {
          if (row[j] == 0) continue;
          mpz_mul(t1.get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
          mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = start; j < cols; ++j) {
        if (j == c) continue;
        // row[j] = (piv * row[j] - f * prow[j]) / prev
        mpz_mul(t1.get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        if (prow[j] != 0) {
          mpz_mul(t2.get_mpz_t(), f.get_mpz_t(), prow[j].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    e.pivot_columns.push_back(c);
    ++pivot_row;
  }
  e.pivot_value = prev;
  return e;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivot_columns.size(); }

ExactVector normalize_integer(std::span<const ExactScalar> v) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    ints[j] = v[j].get_num() * (lcm_den / v[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("cannot normalize the zero vector");
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& x) { return x != 0; });
  if (*lead < 0) g = -g;
  ExactVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    mpz_divexact(ints[j].get_mpz_t(), ints[j].get_mpz_t(), g.get_mpz_t());
    out[j] = ExactScalar(ints[j]);
  }
  return out;
}

std::vector<ExactVector> nullspace(const RationalMatrix& m) {
  const FractionFreeEchelon e = fraction_free_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // pivot_value * x[c_i] + sum_free row_i[f'] * x[f'] = 0 with x[f] = pivot_value.
    ExactVector x(cols);
    x[f] = ExactScalar(e.pivot_value);
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = ExactScalar(-e.rows[i][f]);
    basis.push_back(normalize_integer(x));
  }
  return basis;
}

bool in_span(std::span<const ExactVector> basis, std::span<const ExactScalar> target) {
  const std::size_t n = target.size();
  const std::size_t k = basis.size();
  // Vectors as columns; target is in the span iff appending it keeps the rank.
  RationalMatrix with(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("basis vectors differ in length");
    for (std::size_t i = 0; i < n; ++i) with(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) with(i, k) = target[i];
  const FractionFreeEchelon e = fraction_free_echelon(with);
  // The target column is independent exactly when it becomes a pivot column.
  return e.pivot_columns.empty() || e.pivot_columns.back() != k;
}

}  // namespace sym3
