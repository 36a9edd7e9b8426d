#pragma once

// Reference computations written independently of the library: literal
// index sums over a hand-filled 3x3x3 array, a brute-force product
// enumerator, plain rational Gauss-Jordan, and a small polynomial type for
// symbolic expansion at low degree.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace oracle {

template <class S>
using Cube = std::array<std::array<std::array<S, 3>, 3>, 3>;

// Fills all permutations of each independent component by hand.
template <class S>
Cube<S> fill_symmetric(const std::array<S, 10>& c) {
  Cube<S> a{};
  const int triples[10][3] = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2},
                              {0, 2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  for (int n = 0; n < 10; ++n) {
    int p[3] = {triples[n][0], triples[n][1], triples[n][2]};
    std::sort(p, p + 3);
    do {
      a[p[0]][p[1]][p[2]] = c[n];
    } while (std::next_permutation(p, p + 3));
  }
  return a;
}

template <class S>
struct Parts {
  Cube<S> d;
  std::array<S, 3> u;
};

template <class S>
Parts<S> harmonic(const Cube<S>& a) {
  Parts<S> p{};
  for (int i = 0; i < 3; ++i) p.u[i] = a[i][0][0] + a[i][1][1] + a[i][2][2];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        S iso = S(0);
        if (i == j) iso += p.u[k];
        if (i == k) iso += p.u[j];
        if (j == k) iso += p.u[i];
        p.d[i][j][k] = a[i][j][k] - iso / S(5);
      }
  return p;
}

// Full array of a traceless tensor from the seven stored components.
template <class S>
Cube<S> fill_traceless(const std::array<S, 7>& c) {
  const S d133 = -c[0] - c[3];
  const S d233 = -c[1] - c[5];
  const S d333 = -c[2] - c[6];
  return fill_symmetric<S>({c[0], c[1], c[2], c[3], c[4], d133, c[5], c[6], d233, d333});
}

// The thirteen invariants in canonical order, each written as the literal
// sum of its defining contraction without shared intermediates beyond M, v, w.
template <class S>
std::array<S, 13> invariants(const Cube<S>& D, const std::array<S, 3>& u) {
  const auto R = {0, 1, 2};
  S M[3][3];
  for (int k : R)
    for (int l : R) {
      S s = S(0);
      for (int i : R)
        for (int j : R) s += D[i][j][k] * D[i][j][l];
      M[k][l] = s;
    }
  S v[3], w[3], Mu[3], Mv[3];
  for (int p : R) {
    S s = S(0);
    for (int i : R)
      for (int j : R)
        for (int k : R)
          for (int l : R) s += D[i][j][k] * D[i][j][l] * D[k][l][p];
    v[p] = s;
  }
  for (int k : R) {
    S s = S(0);
    for (int i : R)
      for (int j : R) s += D[i][j][k] * u[i] * u[j];
    w[k] = s;
  }
  for (int i : R) {
    Mu[i] = S(0);
    Mv[i] = S(0);
    for (int j : R) {
      Mu[i] += M[i][j] * u[j];
      Mv[i] += M[i][j] * v[j];
    }
  }
  auto dot = [&](const S* a, const S* b) { return S(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]); };
  const S* up = u.data();
  S i2 = S(0), i4 = S(0), i10 = S(0);
  for (int i : R) i2 += M[i][i];
  for (int k : R)
    for (int l : R) i4 += M[k][l] * M[k][l];
  for (int i : R)
    for (int j : R)
      for (int k : R) i10 += D[i][j][k] * v[i] * v[j] * v[k];
  return {i2,        dot(up, up), i4,         dot(up, Mu), dot(v, up), dot(w, up), dot(v, v),
          dot(Mu, w), dot(v, w),  dot(Mu, v), dot(w, w),   dot(Mu, Mv), i10};
}

template <class S>
std::array<S, 13> invariants_of_components(const std::array<S, 10>& c) {
  const Parts<S> p = harmonic(fill_symmetric(c));
  return invariants(p.d, p.u);
}

// Every exponent vector over the given degrees with weighted sum `degree`,
// found by scanning the full box of exponents.
inline std::vector<std::vector<int>> brute_force_products(const std::vector<int>& degrees, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(degrees.size(), 0);
  while (true) {
    int sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i) sum += e[i] * degrees[i];
    if (sum == degree) out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > degree / degrees[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

// Rank by ordinary Gauss-Jordan over the rationals.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Sparse polynomial in ten variables with rational coefficients.
struct Poly {
  std::map<std::array<int, 10>, mpq_class> terms;

  static Poly constant(const mpq_class& c) {
    Poly p;
    if (sgn(c) != 0) p.terms[{}] = c;
    return p;
  }
  static Poly variable(int index) {
    Poly p;
    std::array<int, 10> e{};
    e[index] = 1;
    p.terms[e] = 1;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) {
      mpq_class& t = terms[e];
      t += c;
      if (sgn(t) == 0) terms.erase(e);
    }
    return *this;
  }
  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms) c = -c;
    return p;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::array<int, 10> e{};
        for (int i = 0; i < 10; ++i) e[i] = ea[i] + eb[i];
        mpq_class& t = p.terms[e];
        t += ca * cb;
        if (sgn(t) == 0) p.terms.erase(e);
      }
    return p;
  }
  friend Poly operator/(Poly a, int k) {
    for (auto& [e, c] : a.terms) c /= k;
    return a;
  }
  Poly(int c = 0) {
    if (c != 0) terms[{}] = c;
  }
};

}  // namespace oracle
