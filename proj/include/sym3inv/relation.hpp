#pragma once

#include <sym3inv/invariants.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sym3 {

enum class Basis { Thirteen, Eleven };

/// Members of a basis in canonical order. The eleven-invariant basis drops K6 and I8.
std::vector<Inv> basis_members(Basis basis);
bool basis_contains(Basis basis, Inv id);
std::string_view basis_name(Basis basis);

/// A power product of invariants, e.g. I2^2 J2 K4.
struct ProductTerm {
  std::array<int, kInvariantCount> exponents{};

  int exponent(Inv id) const { return exponents[static_cast<int>(id)]; }
  int weighted_degree() const;
  int u_degree() const;
  bool uses_only(Basis basis) const;

  /// Space-separated factors, "I2^2 J2 K4"; the empty product prints as "1".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on unknown names.
  static ProductTerm parse(std::string_view text);

  template <class S>
  S evaluate(const InvariantVector<S>& inv) const {
    S result = S(1);
    for (int i = 0; i < kInvariantCount; ++i)
      if (exponents[i] > 0) result *= power(inv.values[i], exponents[i]);
    return result;
  }

  auto operator<=>(const ProductTerm&) const = default;
};

/// A vanishing linear combination of same-degree invariant products.
class SyzygyRelation {
 public:
  struct Term {
    ExactScalar coefficient;
    ProductTerm product;
  };

  /// Validates that all terms share one weighted degree, that there are at
  /// least two terms, that coefficients are nonzero, and that every factor
  /// belongs to the basis. Throws std::invalid_argument otherwise.
  SyzygyRelation(std::string name, Basis basis, std::vector<Term> terms);

  const std::string& name() const { return name_; }
  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of a product, zero if absent.
  ExactScalar coefficient_of(const ProductTerm& product) const;

  /// Sum of coefficient times product value.
  template <class S>
  S residual(const InvariantVector<S>& inv) const {
    S sum = S(0);
    for (const auto& t : terms_) sum += from_exact<S>(t.coefficient) * t.product.evaluate(inv);
    return sum;
  }

 private:
  std::string name_;
  Basis basis_;
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Builds a relation from (coefficient, product) text pairs such as
/// {"-4/9", "I2 J2^3 I4 K4"}.
SyzygyRelation relation_from_table(std::string name, Basis basis,
                                   const std::vector<std::pair<std::string_view, std::string_view>>& table);

// Built-in identities. The degree-10 pair ties I8 and K6 to the other
// invariants; the degree-16 triple holds among the eleven-invariant basis.
const SyzygyRelation& relation_i8();   // degree 10, thirteen invariants
const SyzygyRelation& relation_k6();   // degree 10, thirteen invariants
const SyzygyRelation& relation_e16a(); // degree 16, integer coefficients
const SyzygyRelation& relation_e16b(); // degree 16, denominators 9 and 3
const SyzygyRelation& relation_e16c(); // degree 16, denominators up to 18

/// The five built-ins in the order above.
const std::vector<SyzygyRelation>& builtin_relations();

}  // namespace sym3
