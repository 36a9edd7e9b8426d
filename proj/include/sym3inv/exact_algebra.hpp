#pragma once

#include <sym3inv/scalar.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace sym3 {

using ExactVector = std::vector<ExactScalar>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const ExactScalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  ExactVector apply(std::span<const ExactScalar> x) const;
  RationalMatrix operator*(const RationalMatrix& other) const;

  /// Submatrix keeping all rows and the listed columns, in the given order.
  RationalMatrix select_columns(std::span<const std::size_t> columns) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ExactScalar> entries_;
};

/// Integer reduced echelon form produced by fraction-free Gauss-Jordan
/// elimination. Every pivot equals `pivot_value`, and each pivot column is
/// zero outside its pivot row.
struct FractionFreeEchelon {
  std::vector<std::vector<mpz_class>> rows;  // first `pivot_columns.size()` rows are nonzero
  std::vector<std::size_t> pivot_columns;
  mpz_class pivot_value;
};

/// Bareiss-style elimination. Pivot search scans columns left to right and
/// takes the lowest-index remaining row with a nonzero entry.
FractionFreeEchelon fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column in increasing column
/// order. Each vector has integer entries with gcd 1 and a positive first
/// nonzero entry. Empty when the nullspace is trivial.
std::vector<ExactVector> nullspace(const RationalMatrix& m);

/// Scales a nonzero vector to coprime integers with positive leading entry.
ExactVector normalize_integer(std::span<const ExactScalar> v);

/// True when `target` is a linear combination of `basis` (all of equal length).
bool in_span(std::span<const ExactVector> basis, std::span<const ExactScalar> target);

}  // namespace sym3
