#include <sym3inv/syzygy.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace sym3 {

namespace {

void enumerate_from(const std::vector<Inv>& members, std::size_t index, int remaining, ProductTerm& current,
                    std::vector<ProductTerm>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (index == members.size()) return;
  const int slot = static_cast<int>(members[index]);
  const int deg = kInvariantInfo[slot].degree;
  for (int e = remaining / deg; e >= 0; --e) {
    current.exponents[slot] = e;
    enumerate_from(members, index + 1, remaining - e * deg, current, out);
  }
  current.exponents[slot] = 0;
}

constexpr std::uint64_t kFreshSeedOffset = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::vector<ProductTerm> enumerate_products(Basis basis, int degree) {
  if (degree < 2 || degree % 2 != 0) throw std::invalid_argument("degree must be an even integer >= 2");
  std::vector<ProductTerm> out;
  ProductTerm current;
  enumerate_from(basis_members(basis), 0, degree, current, out);
  return out;
}

std::vector<ExactScalar> evaluate_products(std::span<const ProductTerm> terms,
                                           const HarmonicParts<ExactScalar>& h) {
  const InvariantVector<ExactScalar> inv = all_invariants(h);
  std::vector<ExactScalar> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.evaluate(inv));
  return out;
}

ExactScalar verify_relation(const SyzygyRelation& relation, const HarmonicParts<ExactScalar>& h) {
  return relation.residual(all_invariants(h));
}

ExactVector coefficient_vector(const SyzygyRelation& relation, std::span<const ProductTerm> products) {
  ExactVector out(products.size());
  for (const auto& term : relation.terms()) {
    const auto it = std::find(products.begin(), products.end(), term.product);
    if (it == products.end())
      throw std::invalid_argument("product '" + term.product.to_string() + "' is not enumerated");
    out[static_cast<std::size_t>(it - products.begin())] = term.coefficient;
  }
  return out;
}

RationalMatrix evaluation_matrix(std::span<const ProductTerm> products, std::uint64_t seed, std::size_t count,
                                 std::int64_t range, unsigned threads) {
  RationalMatrix m(count, products.size());
  const auto fill = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t r = begin; r < count; r += stride) {
      const auto values = evaluate_products(products, random_harmonic<ExactScalar>(seed, r, range));
      for (std::size_t c = 0; c < values.size(); ++c) m(r, c) = values[c];
    }
  };
  if (threads <= 1) {
    fill(0, 1);
  } else {
    // Rows are disjoint per worker and each row depends only on (seed, row).
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(fill, t, threads);
  }
  return m;
}

DiscoveryResult discover_relations(const DiscoveryOptions& options) {
  DiscoveryResult result;
  result.basis = options.basis;
  result.degree = options.degree;
  result.products = enumerate_products(options.basis, options.degree);
  const std::size_t p = result.products.size();
  result.sample_count = options.sample_count == 0 ? p + 10 : options.sample_count;
  if (result.sample_count < p + 10)
    throw std::invalid_argument("sample_count must be at least the number of products plus 10 (" +
                                std::to_string(p + 10) + ")");

  const unsigned threads =
      options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const RationalMatrix m = evaluation_matrix(result.products, options.seed, result.sample_count,
                                             options.sample_range, threads);

  std::vector<std::vector<std::size_t>> blocks;
  if (options.split_by_u_degree) {
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t c = 0; c < p; ++c) by_degree[result.products[c].u_degree()].push_back(c);
    for (auto& [deg, cols] : by_degree) blocks.push_back(std::move(cols));
  } else {
    blocks.emplace_back(p);
    for (std::size_t c = 0; c < p; ++c) blocks.back()[c] = c;
  }

  std::vector<ExactVector> candidates;
  for (const auto& cols : blocks) {
    const RationalMatrix sub = blocks.size() == 1 ? m : m.select_columns(cols);
    const auto ns = nullspace(sub);
    result.rank += cols.size() - ns.size();
    for (const auto& local : ns) {
      ExactVector full(p);
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = local[j];
      candidates.push_back(std::move(full));
    }
  }

  const RationalMatrix check = evaluation_matrix(result.products, options.seed + kFreshSeedOffset,
                                                 options.verify_points, options.verify_range, threads);
  std::size_t index = 0;
  for (auto& vec : candidates) {
    const ExactVector residual = check.apply(vec);
    const bool vanishes = std::all_of(residual.begin(), residual.end(), [](const ExactScalar& x) { return sgn(x) == 0; });
    if (!vanishes) {
      ++result.discarded;
      continue;
    }
    std::vector<SyzygyRelation::Term> terms;
    for (std::size_t c = 0; c < p; ++c)
      if (sgn(vec[c]) != 0) terms.push_back({vec[c], result.products[c]});
    if (terms.size() < 2) {
      // A single vanishing product would mean an invariant is identically zero.
      ++result.discarded;
      continue;
    }
    result.relations.emplace_back("discovered-" + std::to_string(index++), options.basis, std::move(terms));
    result.coefficient_vectors.push_back(std::move(vec));
  }
  return result;
}

bool spans_relation(const DiscoveryResult& result, const SyzygyRelation& relation) {
  if (relation.degree() != result.degree) return false;
  for (const auto& term : relation.terms())
    if (!term.product.uses_only(result.basis)) return false;
  return in_span(result.coefficient_vectors, coefficient_vector(relation, result.products));
}

}  // namespace sym3
