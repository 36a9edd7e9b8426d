#pragma once

#include <sym3inv/scalar.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace sym3 {

// Full 3x3x3 array, entry (i,j,k) stored at 9*i + 3*j + k (0-based indices).
template <class S>
using Full3 = std::array<S, 27>;

constexpr int flat_index(int i, int j, int k) { return 9 * i + 3 * j + k; }

namespace detail {

constexpr void sort3(int& a, int& b, int& c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
}

// Slot of the sorted triple in [111,112,113,122,123,133,222,223,233,333].
constexpr int sym_slot(int i, int j, int k) {
  sort3(i, j, k);
  constexpr int table[3][3][3] = {
      {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}},
      {{-1, -1, -1}, {-1, 6, 7}, {-1, -1, 8}},
      {{-1, -1, -1}, {-1, -1, -1}, {-1, -1, 9}},
  };
  return table[i][j][k];
}

// Index triples of the ten independent components, in storage order.
inline constexpr std::array<std::array<int, 3>, 10> kSymTriples{{
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2},
    {0, 2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2},
}};

// Index triples of the seven independent traceless components, in storage order.
inline constexpr std::array<std::array<int, 3>, 7> kTracelessTriples{{
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2}, {1, 1, 1}, {1, 1, 2},
}};

}  // namespace detail

/// Fully symmetric third-order tensor in 3D, stored as its ten independent
/// components [A111, A112, A113, A122, A123, A133, A222, A223, A233, A333].
template <class S>
struct Sym3Tensor {
  std::array<S, 10> c{};

  const S& operator()(int i, int j, int k) const { return c[detail::sym_slot(i, j, k)]; }
  S& operator()(int i, int j, int k) { return c[detail::sym_slot(i, j, k)]; }

  bool operator==(const Sym3Tensor&) const = default;
};

/// Symmetric traceless third-order tensor, stored as
/// [D111, D112, D113, D122, D123, D222, D223]. The remaining independent
/// entries follow from tracelessness:
///   D133 = -D111 - D122,  D233 = -D112 - D222,  D333 = -D113 - D223.
template <class S>
struct Traceless3Tensor {
  std::array<S, 7> c{};

  S d133() const { return -c[0] - c[3]; }
  S d233() const { return -c[1] - c[5]; }
  S d333() const { return -c[2] - c[6]; }

  bool operator==(const Traceless3Tensor&) const = default;
};

template <class S>
struct Vec3 {
  std::array<S, 3> e{};

  const S& operator[](int i) const { return e[i]; }
  S& operator[](int i) { return e[i]; }

  bool operator==(const Vec3&) const = default;
};

/// Harmonic parts (D, u) of a symmetric third-order tensor.
template <class S>
struct HarmonicParts {
  Traceless3Tensor<S> deviator;
  Vec3<S> vector;

  bool operator==(const HarmonicParts&) const = default;
};

class InvalidTensor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 3x3 orthogonal matrix q(i, j). Construction validates Q^T Q = I
/// (exactly for rationals, within 1e-12 per entry for floats).
template <class S>
class Orthogonal3 {
 public:
  using Matrix = std::array<std::array<S, 3>, 3>;

  explicit Orthogonal3(const Matrix& q) : q_(q) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        S dot = S(0);
        for (int k = 0; k < 3; ++k) dot += q_[k][i] * q_[k][j];
        if (i == j) dot -= S(1);
        if (!near_zero(dot)) throw InvalidTensor("matrix is not orthogonal");
      }
    }
  }

  static Orthogonal3 identity() {
    Matrix m{};
    for (int i = 0; i < 3; ++i) m[i][i] = S(1);
    return Orthogonal3(m);
  }

  const S& operator()(int i, int j) const { return q_[i][j]; }
  const Matrix& matrix() const { return q_; }

  S determinant() const {
    const auto& m = q_;
    return S(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
  }

  Orthogonal3 operator*(const Orthogonal3& other) const {
    Matrix m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S s = S(0);
        for (int k = 0; k < 3; ++k) s += q_[i][k] * other.q_[k][j];
        m[i][j] = s;
      }
    return Orthogonal3(m);
  }

 private:
  Matrix q_;
};

// ---------------------------------------------------------------------------
// Expansion and extraction

template <class S>
Full3<S> expand(const Sym3Tensor<S>& t) {
  Full3<S> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) a[flat_index(i, j, k)] = t(i, j, k);
  return a;
}

template <class S>
Full3<S> expand(const Traceless3Tensor<S>& d) {
  // Ten independents in Sym3 order, dependent ones filled from the trace relations.
  const std::array<S, 10> sym{d.c[0], d.c[1], d.c[2], d.c[3], d.c[4],
                              d.d133(), d.c[5], d.c[6], d.d233(), d.d333()};
  Full3<S> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) a[flat_index(i, j, k)] = sym[detail::sym_slot(i, j, k)];
  return a;
}

/// Reads the ten independent components of a full array, rejecting arrays
/// that are not symmetric (exactly / within 1e-12).
template <class S>
Sym3Tensor<S> symmetric_from_full(const Full3<S>& a) {
  Sym3Tensor<S> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const S& stored = a[flat_index(i, j, k)];
        int a0 = i, a1 = j, a2 = k;
        detail::sort3(a0, a1, a2);
        const S& canonical = a[flat_index(a0, a1, a2)];
        if (!near_zero(S(stored - canonical))) throw InvalidTensor("array is not symmetric");
      }
  for (int s = 0; s < 10; ++s) {
    const auto& ix = detail::kSymTriples[s];
    t.c[s] = a[flat_index(ix[0], ix[1], ix[2])];
  }
  return t;
}

/// Reads the seven independent traceless components, rejecting arrays that
/// are not symmetric or not traceless (exactly / within 1e-12).
template <class S>
Traceless3Tensor<S> traceless_from_full(const Full3<S>& a) {
  const Sym3Tensor<S> t = symmetric_from_full(a);
  for (int i = 0; i < 3; ++i) {
    S trace = S(0);
    for (int l = 0; l < 3; ++l) trace += a[flat_index(i, l, l)];
    if (!near_zero(trace)) throw InvalidTensor("deviator is not traceless");
  }
  Traceless3Tensor<S> d;
  for (int s = 0; s < 7; ++s) {
    const auto& ix = detail::kTracelessTriples[s];
    d.c[s] = t(ix[0], ix[1], ix[2]);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Harmonic decomposition

template <class S>
HarmonicParts<S> decompose(const Sym3Tensor<S>& a) {
  const Full3<S> full = expand(a);
  Vec3<S> u;
  for (int i = 0; i < 3; ++i) {
    S s = S(0);
    for (int l = 0; l < 3; ++l) s += full[flat_index(i, l, l)];
    u[i] = s;
  }
  const S fifth = ratio<S>(1, 5);
  Full3<S> dev;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        S iso = S(0);
        if (i == j) iso += u[k];
        if (i == k) iso += u[j];
        if (j == k) iso += u[i];
        dev[flat_index(i, j, k)] = full[flat_index(i, j, k)] - fifth * iso;
      }
  HarmonicParts<S> h;
  for (int s = 0; s < 7; ++s) {
    const auto& ix = detail::kTracelessTriples[s];
    h.deviator.c[s] = dev[flat_index(ix[0], ix[1], ix[2])];
  }
  h.vector = u;
  return h;
}

namespace detail {

template <class S>
Sym3Tensor<S> recompose_full(const Full3<S>& dev, const Vec3<S>& u) {
  const S fifth = ratio<S>(1, 5);
  Sym3Tensor<S> a;
  for (int s = 0; s < 10; ++s) {
    const auto [i, j, k] = kSymTriples[s];
    S iso = S(0);
    if (i == j) iso += u[k];
    if (i == k) iso += u[j];
    if (j == k) iso += u[i];
    a.c[s] = dev[flat_index(i, j, k)] + fifth * iso;
  }
  return a;
}

}  // namespace detail

template <class S>
Sym3Tensor<S> recompose(const HarmonicParts<S>& h) {
  return detail::recompose_full(expand(h.deviator), h.vector);
}

/// Recomposition from a full deviator array; throws InvalidTensor if the
/// array is not symmetric and traceless.
template <class S>
Sym3Tensor<S> recompose(const Full3<S>& deviator, const Vec3<S>& u) {
  (void)traceless_from_full(deviator);
  return detail::recompose_full(deviator, u);
}

// ---------------------------------------------------------------------------
// Orthogonal group action

template <class S>
Full3<S> rotate_full(const Full3<S>& a, const Orthogonal3<S>& q) {
  // Contract one index at a time: 3 * 81 multiplications instead of 729.
  Full3<S> t1, t2, out;
  for (int i = 0; i < 3; ++i)
    for (int j2 = 0; j2 < 3; ++j2)
      for (int j3 = 0; j3 < 3; ++j3) {
        S s = S(0);
        for (int j1 = 0; j1 < 3; ++j1) s += q(i, j1) * a[flat_index(j1, j2, j3)];
        t1[flat_index(i, j2, j3)] = s;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int j3 = 0; j3 < 3; ++j3) {
        S s = S(0);
        for (int j2 = 0; j2 < 3; ++j2) s += q(j, j2) * t1[flat_index(i, j2, j3)];
        t2[flat_index(i, j, j3)] = s;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        S s = S(0);
        for (int j3 = 0; j3 < 3; ++j3) s += q(k, j3) * t2[flat_index(i, j, j3)];
        out[flat_index(i, j, k)] = s;
      }
  return out;
}

template <class S>
Sym3Tensor<S> rotate(const Sym3Tensor<S>& t, const Orthogonal3<S>& q) {
  const Full3<S> r = rotate_full(expand(t), q);
  Sym3Tensor<S> out;
  for (int s = 0; s < 10; ++s) {
    const auto& ix = detail::kSymTriples[s];
    out.c[s] = r[flat_index(ix[0], ix[1], ix[2])];
  }
  return out;
}

template <class S>
Traceless3Tensor<S> rotate(const Traceless3Tensor<S>& d, const Orthogonal3<S>& q) {
  const Full3<S> r = rotate_full(expand(d), q);
  Traceless3Tensor<S> out;
  for (int s = 0; s < 7; ++s) {
    const auto& ix = detail::kTracelessTriples[s];
    out.c[s] = r[flat_index(ix[0], ix[1], ix[2])];
  }
  return out;
}

template <class S>
Vec3<S> rotate(const Vec3<S>& u, const Orthogonal3<S>& q) {
  Vec3<S> out;
  for (int i = 0; i < 3; ++i) {
    S s = S(0);
    for (int j = 0; j < 3; ++j) s += q(i, j) * u[j];
    out[i] = s;
  }
  return out;
}

template <class S>
Sym3Tensor<S> scaled(const Sym3Tensor<S>& t, const S& factor) {
  Sym3Tensor<S> out = t;
  for (auto& x : out.c) x *= factor;
  return out;
}

template <class S>
HarmonicParts<S> flip_vector(const HarmonicParts<S>& h) {
  HarmonicParts<S> out = h;
  for (auto& x : out.vector.e) x = -x;
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generation

namespace detail {

template <class S, class Rng>
S draw(Rng& rng, std::int64_t range) {
  if (range == 0) return S(0);
  if constexpr (is_exact_v<S>) {
    std::uniform_int_distribution<std::int64_t> dist(-range, range);
    return ExactScalar(static_cast<long>(dist(rng)));
  } else {
    std::uniform_real_distribution<double> dist(-static_cast<double>(range),
                                                static_cast<double>(range));
    return dist(rng);
  }
}

inline void check_range(std::int64_t range) {
  if (range < 0) throw std::invalid_argument("range must be nonnegative");
}

}  // namespace detail

/// Ten components drawn independently: integers in [-range, range] for the
/// rational field, uniform reals in [-range, range] for floats.
template <class S>
Sym3Tensor<S> random_sym3(std::uint64_t seed, std::int64_t range) {
  detail::check_range(range);
  std::mt19937_64 rng(seed);
  Sym3Tensor<S> t;
  for (auto& x : t.c) x = detail::draw<S>(rng, range);
  return t;
}

/// Seven deviator components and three vector components drawn as in
/// random_sym3. The stream is keyed by (seed, index) so that sample i is
/// independent of how many other samples are generated.
template <class S>
HarmonicParts<S> random_harmonic(std::uint64_t seed, std::uint64_t index, std::int64_t range) {
  detail::check_range(range);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  HarmonicParts<S> h;
  for (auto& x : h.deviator.c) x = detail::draw<S>(rng, range);
  for (auto& x : h.vector.e) x = detail::draw<S>(rng, range);
  return h;
}

/// Gram-Schmidt on a seeded Gaussian 3x3 matrix; a reflection diag(-1, 1, 1)
/// is composed on the left when the determinant sign does not match.
Orthogonal3<double> random_orthogonal(std::uint64_t seed, int det_sign);

}  // namespace sym3
