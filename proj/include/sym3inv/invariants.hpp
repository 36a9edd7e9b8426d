#pragma once

#include <sym3inv/tensor_core.hpp>

#include <array>
#include <optional>
#include <string_view>

namespace sym3 {

/// The thirteen invariants of the integrity basis, in canonical order.
enum class Inv : int { I2, J2, I4, J4, K4, L4, I6, J6, K6, L6, M6, I8, I10 };

inline constexpr int kInvariantCount = 13;

struct InvariantInfo {
  std::string_view name;
  int degree;    // homogeneity degree in the components of A
  int d_degree;  // degree in the deviator D
  int u_degree;  // degree in the vector u
  bool odd_in_u() const { return (u_degree % 2) != 0; }
};

// Bidegrees (D, u) read off the defining contractions, with v cubic in D and
// w linear in D and quadratic in u.
inline constexpr std::array<InvariantInfo, kInvariantCount> kInvariantInfo{{
    {"I2", 2, 2, 0},
    {"J2", 2, 0, 2},
    {"I4", 4, 4, 0},
    {"J4", 4, 2, 2},
    {"K4", 4, 3, 1},
    {"L4", 4, 1, 3},
    {"I6", 6, 6, 0},
    {"J6", 6, 3, 3},
    {"K6", 6, 4, 2},
    {"L6", 6, 5, 1},
    {"M6", 6, 2, 4},
    {"I8", 8, 7, 1},
    {"I10", 10, 10, 0},
}};

constexpr const InvariantInfo& info(Inv id) { return kInvariantInfo[static_cast<int>(id)]; }

inline std::optional<Inv> invariant_from_name(std::string_view name) {
  for (int i = 0; i < kInvariantCount; ++i)
    if (kInvariantInfo[i].name == name) return static_cast<Inv>(i);
  return std::nullopt;
}

template <class S>
struct InvariantVector {
  std::array<S, kInvariantCount> values{};

  const S& operator[](Inv id) const { return values[static_cast<int>(id)]; }
  S& operator[](Inv id) { return values[static_cast<int>(id)]; }

  static constexpr const InvariantInfo& meta(Inv id) { return info(id); }

  bool operator==(const InvariantVector&) const = default;
};

template <class S>
struct SmithBaoInvariants {
  S I2, I4, I6, I10;
  bool operator==(const SmithBaoInvariants&) const = default;
};

namespace detail {

// M_kl = D_ijk D_ijl
template <class S>
std::array<std::array<S, 3>, 3> deviator_gram(const Full3<S>& d) {
  std::array<std::array<S, 3>, 3> m{};
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) {
      S s = S(0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += d[flat_index(i, j, k)] * d[flat_index(i, j, l)];
      m[k][l] = s;
      m[l][k] = s;
    }
  return m;
}

// x_k = D_ijk a_i b_j
template <class S>
Vec3<S> contract_two(const Full3<S>& d, const Vec3<S>& a, const Vec3<S>& b) {
  Vec3<S> out;
  for (int k = 0; k < 3; ++k) {
    S s = S(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += d[flat_index(i, j, k)] * a[i] * b[j];
    out[k] = s;
  }
  return out;
}

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return S(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

template <class S>
Vec3<S> mat_vec(const std::array<std::array<S, 3>, 3>& m, const Vec3<S>& x) {
  Vec3<S> out;
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
  return out;
}

// v_p = D_ijk D_ijl D_klp = M_kl D_klp
template <class S>
Vec3<S> v_from(const Full3<S>& d, const std::array<std::array<S, 3>, 3>& m) {
  Vec3<S> v;
  for (int p = 0; p < 3; ++p) {
    S s = S(0);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) s += m[k][l] * d[flat_index(k, l, p)];
    v[p] = s;
  }
  return v;
}

}  // namespace detail

/// v_p = D_ijk D_ijl D_klp
template <class S>
Vec3<S> v_vector(const Traceless3Tensor<S>& d) {
  const Full3<S> full = expand(d);
  return detail::v_from(full, detail::deviator_gram(full));
}

/// w_k = D_ijk u_i u_j
template <class S>
Vec3<S> w_vector(const Traceless3Tensor<S>& d, const Vec3<S>& u) {
  return detail::contract_two(expand(d), u, u);
}

/// All thirteen invariants from the expanded deviator, routed through the
/// shared intermediates M = D:D, v and w.
template <class S>
InvariantVector<S> all_invariants(const HarmonicParts<S>& h) {
  const Full3<S> d = expand(h.deviator);
  const Vec3<S>& u = h.vector;
  const auto m = detail::deviator_gram(d);
  const Vec3<S> v = detail::v_from(d, m);
  const Vec3<S> w = detail::contract_two(d, u, u);
  const Vec3<S> mu = detail::mat_vec(m, u);
  const Vec3<S> mv = detail::mat_vec(m, v);

  InvariantVector<S> r;
  r[Inv::I2] = m[0][0] + m[1][1] + m[2][2];
  r[Inv::J2] = detail::dot(u, u);
  S i4 = S(0);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) i4 += m[k][l] * m[k][l];
  r[Inv::I4] = i4;
  r[Inv::J4] = detail::dot(u, mu);
  r[Inv::K4] = detail::dot(v, u);
  r[Inv::L4] = detail::dot(w, u);
  r[Inv::I6] = detail::dot(v, v);
  r[Inv::J6] = detail::dot(mu, w);
  r[Inv::K6] = detail::dot(v, w);
  r[Inv::L6] = detail::dot(mu, v);
  r[Inv::M6] = detail::dot(w, w);
  r[Inv::I8] = detail::dot(mu, mv);
  r[Inv::I10] = detail::dot(detail::contract_two(d, v, v), v);
  return r;
}

template <class S>
SmithBaoInvariants<S> smith_bao(const Traceless3Tensor<S>& d) {
  const Full3<S> full = expand(d);
  const auto m = detail::deviator_gram(full);
  const Vec3<S> v = detail::v_from(full, m);
  SmithBaoInvariants<S> r;
  r.I2 = m[0][0] + m[1][1] + m[2][2];
  S i4 = S(0);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) i4 += m[k][l] * m[k][l];
  r.I4 = i4;
  r.I6 = detail::dot(v, v);
  r.I10 = detail::dot(detail::contract_two(full, v, v), v);
  return r;
}

template <class S>
InvariantVector<S> invariants_of(const Sym3Tensor<S>& a) {
  return all_invariants(decompose(a));
}

}  // namespace sym3
