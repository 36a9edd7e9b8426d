#pragma once

#include <sym3inv/exact_algebra.hpp>
#include <sym3inv/relation.hpp>
#include <sym3inv/tensor_core.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sym3 {

/// All power products of basis invariants with the given weighted degree,
/// in descending lexicographic order of exponent vectors (canonical invariant
/// order), e.g. degree 4: I2^2, I2 J2, J2^2, I4, J4, K4, L4.
std::vector<ProductTerm> enumerate_products(Basis basis, int degree);

std::vector<ExactScalar> evaluate_products(std::span<const ProductTerm> terms,
                                           const HarmonicParts<ExactScalar>& h);

ExactScalar verify_relation(const SyzygyRelation& relation, const HarmonicParts<ExactScalar>& h);

/// Coefficients of `relation` over `products`; throws if the relation uses a
/// product outside the list.
ExactVector coefficient_vector(const SyzygyRelation& relation, std::span<const ProductTerm> products);

struct DiscoveryOptions {
  Basis basis = Basis::Thirteen;
  int degree = 10;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;           // 0 selects products + 10
  std::int64_t sample_range = 9;          // evaluation-matrix entries drawn from [-9, 9]
  std::int64_t verify_range = 1'000'000;  // re-verification points from [-10^6, 10^6]
  std::size_t verify_points = 20;
  // Relations are homogeneous in D and in u separately, so the nullspace
  // splits into blocks of products sharing a u-degree. Eliminating the blocks
  // separately yields the same space with far smaller integer growth.
  bool split_by_u_degree = true;
  unsigned threads = 0;  // 0 selects hardware concurrency
};

struct DiscoveryResult {
  Basis basis = Basis::Thirteen;
  int degree = 0;
  std::vector<ProductTerm> products;
  std::size_t sample_count = 0;
  std::size_t rank = 0;
  std::vector<SyzygyRelation> relations;
  std::vector<ExactVector> coefficient_vectors;  // normalized, one per relation
  std::size_t discarded = 0;                     // nullspace vectors failing re-verification
};

/// Builds the sample_count x P evaluation matrix at seeded random harmonic
/// parts, computes its exact nullspace, and keeps every nullspace vector that
/// also vanishes at `verify_points` fresh random points. Throws
/// std::invalid_argument when sample_count < P + 10.
DiscoveryResult discover_relations(const DiscoveryOptions& options);

/// True when the relation's coefficient vector lies in the span of the
/// discovered relations.
bool spans_relation(const DiscoveryResult& result, const SyzygyRelation& relation);

/// Evaluation matrix rows for samples [0, count) of the given seed.
RationalMatrix evaluation_matrix(std::span<const ProductTerm> products, std::uint64_t seed,
                                 std::size_t count, std::int64_t range, unsigned threads = 1);

}  // namespace sym3
