#pragma once

#include <sym3inv/invariants.hpp>
#include <sym3inv/relation.hpp>

#include <array>
#include <stdexcept>

namespace sym3 {

/// Values of the eleven-invariant function basis (the thirteen without K6 and I8).
template <class S>
class ElevenBasis {
 public:
  ElevenBasis() = default;

  static ElevenBasis from(const InvariantVector<S>& all) {
    ElevenBasis b;
    b.values_ = all;
    b.values_[Inv::K6] = S(0);
    b.values_[Inv::I8] = S(0);
    return b;
  }

  const S& operator[](Inv id) const {
    check(id);
    return values_[id];
  }
  void set(Inv id, const S& value) {
    check(id);
    values_[id] = value;
  }

  /// The eleven values embedded in a thirteen-slot vector with K6 = I8 = 0.
  const InvariantVector<S>& embedded() const { return values_; }

 private:
  static void check(Inv id) {
    if (id == Inv::K6 || id == Inv::I8)
      throw std::out_of_range("K6 and I8 are not members of the eleven-invariant basis");
  }

  InvariantVector<S> values_;
};

namespace detail {

template <class S>
struct LinearSolve {
  S numerator;    // minus the sum of target-free terms
  S denominator;  // sum of coefficient * cofactor over terms containing the target once
};

// Treats the relation as linear in `target` and splits it into
// denominator * target = numerator.
template <class S>
LinearSolve<S> split_linear(const SyzygyRelation& relation, Inv target, const InvariantVector<S>& known) {
  LinearSolve<S> out{S(0), S(0)};
  for (const auto& term : relation.terms()) {
    const int e = term.product.exponent(target);
    if (e > 1) throw std::logic_error(relation.name() + " is not linear in the target invariant");
    ProductTerm cofactor = term.product;
    cofactor.exponents[static_cast<int>(target)] = 0;
    const S value = S(from_exact<S>(term.coefficient) * cofactor.evaluate(known));
    if (e == 0)
      out.numerator -= value;
    else
      out.denominator += value;
  }
  return out;
}

}  // namespace detail

// Float zero tests for the two denominators. J2 = |u|^2 counts as zero when
// |u|^2 <= 1e-12 * max(1, |D|^2); 2 I2 J2 - 3 J4 counts as zero when it is at
// most 1e-12 * I2 * J2, i.e. relative to |D|^2 |u|^2. Rationals use exact zero.
inline constexpr double kDenominatorZeroTol = 1e-12;

template <class S>
bool j2_is_zero(const S& j2, const S& i2) {
  if constexpr (is_exact_v<S>) {
    (void)i2;
    return sgn(j2) == 0;
  } else {
    return std::abs(j2) <= kDenominatorZeroTol * std::max(1.0, std::abs(i2));
  }
}

template <class S>
bool k6_denominator_is_zero(const S& denominator, const S& i2, const S& j2) {
  if constexpr (is_exact_v<S>) {
    (void)i2;
    (void)j2;
    return sgn(denominator) == 0;
  } else {
    return std::abs(denominator) <= kDenominatorZeroTol * std::abs(i2 * j2);
  }
}

/// I8 from the eleven basis plus K6, via the degree-10 relation
/// 6 J2 I8 = (polynomial in the others). Returns 0 when u = 0 (J2 = 0).
template <class S>
S reconstruct_I8(const ElevenBasis<S>& b, const S& k6) {
  if (j2_is_zero(b[Inv::J2], b[Inv::I2])) return S(0);
  InvariantVector<S> known = b.embedded();
  known[Inv::K6] = k6;
  const auto split = detail::split_linear(relation_i8(), Inv::I8, known);
  return S(split.numerator / split.denominator);
}

/// K6 from the eleven basis via (2 I2 J2 - 3 J4) K6 = (polynomial in the
/// others). Returns 0 on the degenerate locus D = 0 or u = 0, where the
/// factor 2 I2 J2 - 3 J4 vanishes.
template <class S>
S reconstruct_K6(const ElevenBasis<S>& b) {
  const auto split = detail::split_linear(relation_k6(), Inv::K6, b.embedded());
  if (k6_denominator_is_zero(split.denominator, b[Inv::I2], b[Inv::J2])) return S(0);
  return S(split.numerator / split.denominator);
}

/// Recovers the full thirteen-value vector from the eleven basis.
template <class S>
InvariantVector<S> complete(const ElevenBasis<S>& b) {
  InvariantVector<S> out = b.embedded();
  out[Inv::K6] = reconstruct_K6(b);
  out[Inv::I8] = reconstruct_I8(b, out[Inv::K6]);
  return out;
}

}  // namespace sym3
