#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace sym3 {

// Arbitrary-precision rational. gmpxx keeps values canonical
// (gcd(|num|, den) = 1, den > 0) after every arithmetic operation.
using ExactScalar = mpq_class;

enum class Field { Rational, Float };

template <class S>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr Field field = Field::Float;
  // Absolute tolerance for structural checks (tracelessness, orthogonality).
  static constexpr double structural_tol = 1e-12;
};

template <>
struct FieldTraits<ExactScalar> {
  static constexpr bool exact = true;
  static constexpr Field field = Field::Rational;
};

template <class S>
inline constexpr bool is_exact_v = FieldTraits<S>::exact;

template <class S>
S ratio(long num, long den) {
  if constexpr (is_exact_v<S>) {
    ExactScalar q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <class S>
S from_exact(const ExactScalar& q) {
  if constexpr (is_exact_v<S>) {
    return q;
  } else {
    return q.get_d();
  }
}

inline double to_double(double x) { return x; }
inline double to_double(const ExactScalar& q) { return q.get_d(); }

inline double abs_value(double x) { return std::abs(x); }
inline ExactScalar abs_value(const ExactScalar& q) { return abs(q); }

// Structural zero test: exact equality for rationals, |x| <= tol for floats.
inline bool near_zero(double x, double tol = FieldTraits<double>::structural_tol) {
  return std::abs(x) <= tol;
}
inline bool near_zero(const ExactScalar& q, double = 0.0) { return sgn(q) == 0; }

template <class S>
S power(const S& base, int exp) {
  S result = S(1);
  S b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

// "p/q" with q > 0 in lowest terms; integers print as "p".
std::string format_rational(const ExactScalar& q);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
ExactScalar parse_rational(std::string_view text);

}  // namespace sym3
