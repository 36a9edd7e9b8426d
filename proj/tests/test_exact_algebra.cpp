#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include <sym3inv/exact_algebra.hpp>

#include <random>

using namespace sym3;
using Q = ExactScalar;
using test::q;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RationalMatrix random_integer(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

std::vector<std::vector<Q>> rows_of(const RationalMatrix& m) {
  std::vector<std::vector<Q>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

void check_normalized(const ExactVector& v) {
  mpz_class g = 0;
  bool leading_seen = false;
  for (const auto& x : v) {
    CHECK(x.get_den() == 1);
    if (sgn(x) != 0 && !leading_seen) {
      CHECK(sgn(x) > 0);
      leading_seen = true;
    }
    mpz_class n = x.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  CHECK(leading_seen);
  CHECK(g == 1);
}

}  // namespace

TEST_CASE("ExactScalar is canonical and satisfies field identities") {
  const Q a = q(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 7; ++d) {
      if (n == 0) continue;
      const Q x = q(n, d);
      CHECK(x * (1 / x) == 1);
      CHECK(gcd(x.get_num(), x.get_den()) == 1);
    }
  CHECK(format_rational(q(-4, 6)) == "-2/3");
  CHECK(format_rational(Q(7)) == "7");
  CHECK(parse_rational("+10/4") == q(5, 2));
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("200-digit rationals multiply without loss") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 200);
  const Q a(big + 7, big - 3);
  const Q b(big - 3, big + 11);
  const Q prod = a * b;
  CHECK(prod == Q(big + 7, big + 11));
  CHECK(prod * Q(big + 11, big + 7) == 1);
  CHECK(mpz_sizeinbase(prod.get_num().get_mpz_t(), 10) == 201);
}

TEST_CASE("nullspace and rank: small examples") {
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(rank(RationalMatrix(4, 6)) == 0);
  CHECK(nullspace(RationalMatrix(2, 3)).size() == 3);

  const auto ns = nullspace(from_rows({{1, 2}, {2, 4}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == ExactVector{2, -1});

  // Rational entries normalize to coprime integers.
  RationalMatrix m(1, 3);
  m(0, 0) = q(1, 2);
  m(0, 1) = q(1, 3);
  m(0, 2) = q(-1, 6);
  for (const auto& v : nullspace(m)) {
    check_normalized(v);
    CHECK(sgn(m.apply(v)[0]) == 0);
  }
}

TEST_CASE("fraction-free echelon: pivots equal the final pivot value") {
  std::mt19937_64 rng(4);
  const auto m = random_integer(rng, 6, 9, 9);
  const auto e = fraction_free_echelon(m);
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    CHECK(e.rows[i][e.pivot_columns[i]] == e.pivot_value);
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k)
      if (k != i) CHECK(e.rows[k][e.pivot_columns[i]] == 0);
  }
}

TEST_CASE("constructed rank-r 20x30 matrices") {
  std::mt19937_64 rng(20);
  for (std::size_t r : {0u, 1u, 5u, 12u, 20u}) {
    const auto m = r == 0 ? RationalMatrix(20, 30) : random_integer(rng, 20, r, 9) * random_integer(rng, r, 30, 9);
    CHECK(rank(m) == r);
    CHECK(oracle::rank(rows_of(m)) == r);
    const auto ns = nullspace(m);
    CHECK(ns.size() == 30 - r);
    for (const auto& v : ns) {
      check_normalized(v);
      for (const auto& x : m.apply(v)) CHECK(sgn(x) == 0);
    }
    // Independence of the returned vectors.
    std::vector<std::vector<Q>> stacked(ns.begin(), ns.end());
    if (!stacked.empty()) CHECK(oracle::rank(stacked) == ns.size());
    CHECK(rank(m) + ns.size() == m.cols());
  }
}

TEST_CASE("nullspace is deterministic") {
  std::mt19937_64 rng(3);
  const auto m = random_integer(rng, 8, 4, 5) * random_integer(rng, 4, 12, 5);
  CHECK(nullspace(m) == nullspace(m));
}

TEST_CASE("in_span") {
  const std::vector<ExactVector> basis{{1, 0, 1}, {0, 1, 1}};
  CHECK(in_span(basis, ExactVector{2, 3, 5}));
  CHECK(in_span(basis, ExactVector{0, 0, 0}));
  CHECK_FALSE(in_span(basis, ExactVector{0, 0, 1}));
  CHECK(in_span(std::vector<ExactVector>{}, ExactVector{0, 0}));
  CHECK_FALSE(in_span(std::vector<ExactVector>{}, ExactVector{0, 1}));
}
