#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include <sym3inv/tensor_core.hpp>
#include <sym3inv/tensor_io.hpp>

#include <algorithm>
#include <cmath>
#include <set>

using namespace sym3;
using Q = ExactScalar;

TEST_CASE("expand: zero, orbit of A123 and dependent traceless entries") {
  const Full3<Q> zero = expand(Sym3Tensor<Q>{});
  CHECK(std::all_of(zero.begin(), zero.end(), [](const Q& x) { return sgn(x) == 0; }));

  Sym3Tensor<Q> t;
  t(0, 1, 2) = 1;
  const Full3<Q> f = expand(t);
  int ones = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const bool perm = std::set<int>{i, j, k}.size() == 3;
        CHECK(f[flat_index(i, j, k)] == (perm ? 1 : 0));
        ones += perm;
      }
  CHECK(ones == 6);

  Traceless3Tensor<Q> d;
  d.c[0] = 1;  // D111
  d.c[3] = 1;  // D122
  const Full3<Q> fd = expand(d);
  CHECK(fd[flat_index(0, 2, 2)] == -2);
  CHECK(fd[flat_index(2, 0, 2)] == -2);
  CHECK(fd[flat_index(2, 2, 0)] == -2);
}

TEST_CASE("expand agrees with the hand-filled array and is symmetric over all 27 entries") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto t = random_sym3<Q>(s, 9);
    const Full3<Q> f = expand(t);
    const auto ref = oracle::fill_symmetric(t.c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const Q& x = f[flat_index(i, j, k)];
          CHECK(x == ref[i][j][k]);
          CHECK(x == f[flat_index(j, i, k)]);
          CHECK(x == f[flat_index(i, k, j)]);
          CHECK(x == f[flat_index(k, j, i)]);
          CHECK(x == f[flat_index(j, k, i)]);
          CHECK(x == f[flat_index(k, i, j)]);
        }
  }
}

TEST_CASE("decompose: zero tensor and the L6 witness") {
  const auto z = decompose(Sym3Tensor<Q>{});
  CHECK(z == HarmonicParts<Q>{});

  const auto h = decompose(test::l6_witness());
  CHECK(h.vector == Vec3<Q>{{1, 0, 0}});
  CHECK(h.deviator.c == std::array<Q, 7>{0, 0, 0, 1, 0, 0, test::q(1, 2)});
  CHECK(h.deviator.d133() == -1);
  CHECK(h.deviator.d233() == 0);
  CHECK(h.deviator.d333() == test::q(-1, 2));
}

TEST_CASE("decompose: only A122 = 1 matches the defining formula") {
  Sym3Tensor<Q> a;
  a(0, 1, 1) = 1;
  const auto h = decompose(a);
  CHECK(h.vector == Vec3<Q>{{1, 0, 0}});
  // D_ijk = A_ijk - (u_k d_ij + u_j d_ik + u_i d_jk) / 5 with u = e1.
  CHECK(h.deviator.c[0] == test::q(-3, 5));  // D111 = 0 - 3/5
  CHECK(h.deviator.c[3] == test::q(4, 5));   // D122 = 1 - 1/5
  CHECK(h.deviator.d133() == test::q(-1, 5));
  CHECK(recompose(h) == a);
}

TEST_CASE("recompose: zero, pure vector, L6 round trip, and traceless rejection") {
  CHECK(recompose(HarmonicParts<Q>{}) == Sym3Tensor<Q>{});

  HarmonicParts<Q> h;
  h.vector = Vec3<Q>{{1, 0, 0}};
  const auto a = recompose(h);
  Sym3Tensor<Q> expect;
  expect(0, 0, 0) = test::q(3, 5);
  expect(0, 1, 1) = test::q(1, 5);
  expect(0, 2, 2) = test::q(1, 5);
  CHECK(a == expect);

  CHECK(recompose(decompose(test::l6_witness())) == test::l6_witness());

  Full3<Q> bad{};
  bad[flat_index(0, 0, 0)] = 1;  // D111 = 1 with nothing to cancel the trace
  CHECK_THROWS_AS(recompose(bad, Vec3<Q>{}), InvalidTensor);
  Full3<double> bad_f{};
  bad_f[flat_index(0, 0, 0)] = 1e-9;
  CHECK_THROWS_AS(recompose(bad_f, Vec3<double>{}), InvalidTensor);
}

TEST_CASE("round trips on 1000 random tensors: exact and float") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto a = random_sym3<Q>(s, 9);
    const auto h = decompose(a);
    REQUIRE(recompose(h) == a);
    // Trace conditions hold exactly.
    const Full3<Q> d = expand(h.deviator);
    for (int i = 0; i < 3; ++i)
      CHECK(d[flat_index(i, 0, 0)] + d[flat_index(i, 1, 1)] + d[flat_index(i, 2, 2)] == 0);

    const auto hf = random_harmonic<double>(s, 0, 9);
    const auto back = decompose(recompose(hf));
    for (int i = 0; i < 7; ++i) CHECK(std::abs(back.deviator.c[i] - hf.deviator.c[i]) <= 1e-12);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(back.vector[i] - hf.vector[i]) <= 1e-12);
  }
}

TEST_CASE("rotate: identity, minus identity, and the 1<->2 swap") {
  const auto t = random_sym3<Q>(11, 9);
  CHECK(rotate(t, Orthogonal3<Q>::identity()) == t);

  Orthogonal3<Q>::Matrix m{};
  for (int i = 0; i < 3; ++i) m[i][i] = -1;
  const auto neg = rotate(t, Orthogonal3<Q>(m));
  for (int i = 0; i < 10; ++i) CHECK(neg.c[i] == -t.c[i]);

  Orthogonal3<Q>::Matrix swap{};
  swap[0][1] = swap[1][0] = swap[2][2] = 1;
  const auto s = rotate(t, Orthogonal3<Q>(swap));
  CHECK(s(0, 1, 1) == t(0, 0, 1));  // A112 lands on A221 = A122
  CHECK(s(1, 1, 1) == t(0, 0, 0));
  CHECK(s(0, 1, 2) == t(0, 1, 2));
  CHECK(s(2, 2, 2) == t(2, 2, 2));

  // Against the literal sum over the expanded array.
  const auto q = random_orthogonal(5, -1);
  const auto tf = random_sym3<double>(5, 3);
  const auto r = rotate(tf, q);
  const auto a = oracle::fill_symmetric(tf.c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double sum = 0;
        for (int p = 0; p < 3; ++p)
          for (int qq = 0; qq < 3; ++qq)
            for (int w = 0; w < 3; ++w) sum += q(i, p) * q(j, qq) * q(k, w) * a[p][qq][w];
        CHECK(r(i, j, k) == doctest::Approx(sum).epsilon(1e-13));
      }
}

TEST_CASE("orthogonal validation rejects non-orthogonal matrices") {
  Orthogonal3<Q>::Matrix m{};
  m[0][0] = 2;
  m[1][1] = m[2][2] = 1;
  CHECK_THROWS_AS(Orthogonal3<Q>{m}, InvalidTensor);
  Orthogonal3<double>::Matrix f{};
  f[0][0] = 1 + 1e-9;
  f[1][1] = f[2][2] = 1;
  CHECK_THROWS_AS(Orthogonal3<double>{f}, InvalidTensor);
}

TEST_CASE("equivariance: decompose commutes with the orthogonal action") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto a = random_sym3<double>(s, 5);
    const auto q = random_orthogonal(1000 + s, s % 2 ? -1 : 1);
    const auto lhs = decompose(rotate(a, q));
    const auto h = decompose(a);
    const auto dr = rotate(h.deviator, q);
    const auto ur = rotate(h.vector, q);
    for (int i = 0; i < 7; ++i) CHECK(std::abs(lhs.deviator.c[i] - dr.c[i]) <= 1e-9);
    for (int i = 0; i < 3; ++i) {
      double qu = 0;
      for (int j = 0; j < 3; ++j) qu += q(i, j) * h.vector[j];
      CHECK(std::abs(lhs.vector[i] - qu) <= 1e-9);
      CHECK(std::abs(ur[i] - qu) <= 1e-12);
    }
  }
}

TEST_CASE("random_sym3: determinism, seed sensitivity, range") {
  CHECK(random_sym3<Q>(3, 9) == random_sym3<Q>(3, 9));
  CHECK(random_sym3<double>(3, 9) == random_sym3<double>(3, 9));
  int differ = 0;
  for (std::uint64_t s = 0; s < 100; ++s) differ += random_sym3<Q>(2 * s, 9) != random_sym3<Q>(2 * s + 1, 9);
  CHECK(differ == 100);
  CHECK(random_sym3<Q>(7, 0) == Sym3Tensor<Q>{});
  CHECK_THROWS(random_sym3<Q>(7, -1));
  for (std::uint64_t s = 0; s < 100; ++s) {
    for (const auto& x : random_sym3<Q>(s, 4).c) {
      CHECK(x.get_den() == 1);
      CHECK(abs(x) <= 4);
    }
    for (double x : random_sym3<double>(s, 4).c) CHECK(std::abs(x) <= 4.0);
  }
}

TEST_CASE("random_orthogonal: determinant sign, orthogonality, closure, determinism") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto p = random_orthogonal(s, 1);
    const auto m = random_orthogonal(s, -1);
    CHECK(std::abs(p.determinant() - 1) <= 1e-9);
    CHECK(std::abs(m.determinant() + 1) <= 1e-9);
    const auto prod = (p * m).matrix();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double dot = 0;
        for (int k = 0; k < 3; ++k) dot += prod[k][i] * prod[k][j];
        CHECK(std::abs(dot - (i == j)) <= 1e-11);
      }
  }
  CHECK(random_orthogonal(9, 1).matrix() == random_orthogonal(9, 1).matrix());
  CHECK_THROWS_AS(random_orthogonal(1, 0), std::invalid_argument);
}

TEST_CASE("tensor JSON: parsing, canonical rationals, and validation") {
  const auto t = tensor_from_json(nlohmann::json::parse(
      R"({"format":"sym3-v1","field":"rational","components":["6/10","0","0","12/10",0,"-4/5","0","1/2","0","-1/2"]})"));
  const auto& q = std::get<Sym3Tensor<Q>>(t);
  CHECK(q == test::l6_witness());
  CHECK(tensor_to_json(q)["components"][0] == "3/5");
  CHECK(tensor_to_json(q)["components"][3] == "6/5");

  const auto bad = [](const char* text) { return tensor_from_json(nlohmann::json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v1","field":"rational","components":["1","2"]})"), MalformedInput);
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v2","field":"rational","components":[]})"), MalformedInput);
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v1","field":"complex","components":[1,2,3,4,5,6,7,8,9,10]})"), MalformedInput);
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v1","field":"rational","components":["1/0",2,3,4,5,6,7,8,9,10]})"),
                  MalformedInput);
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v1","field":"rational","components":[0.5,2,3,4,5,6,7,8,9,10]})"),
                  MalformedInput);
  CHECK_THROWS_AS(bad(R"({"format":"sym3-v1","field":"float","components":["1",2,3,4,5,6,7,8,9,10]})"),
                  MalformedInput);
  CHECK_THROWS_AS(read_tensor_file("/nonexistent/tensor.json"), UnreadableFile);
}
