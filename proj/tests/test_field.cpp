#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtc/channel.hpp"
#include "rtc/ext_field.hpp"
#include "rtc/linalg.hpp"

using namespace rtc;

TEST_CASE("ground field axioms hold exhaustively for small prime powers") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
    GroundField K = GroundField::make(q);
    REQUIRE(K.q() == q);
    for (uint32_t x = 0; x < q; ++x) {
      CHECK(K.add(x, 0) == x);
      CHECK(K.mul(x, 1) == x);
      CHECK(K.add(x, K.neg(x)) == 0);
      if (x != 0) CHECK(K.mul(x, K.inv(x)) == 1);
      for (uint32_t y = 0; y < q; ++y) {
        CHECK(K.add(x, y) == K.add(y, x));
        CHECK(K.mul(x, y) == K.mul(y, x));
        for (uint32_t z = 0; z < q; ++z)
          CHECK(K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z)));
      }
    }
  }
}

TEST_CASE("default GF(8) modulus is x^3 + x + 1") {
  ExtField F = ExtField::make(2, 3);
  CHECK(F.modulus() == std::vector<uint32_t>{1, 1, 0, 1});
}

TEST_CASE("reducible modulus is rejected") {
  GroundField K(2);
  // x^3 + 1 = (x + 1)(x^2 + x + 1)
  CHECK_THROWS_AS(ExtField(K, 3, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("field inverse and power in GF(3^4)") {
  ExtField F = ExtField::make(3, 4);
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    FF x = random_nonzero(F, rng);
    CHECK(F.mul(x, F.inv(x)) == F.one());
    CHECK(F.pow(x, F.order() - 1) == F.one());
  }
}

TEST_CASE("frobenius is the identity at l = 0 and at l = n") {
  ExtField F = ExtField::make(3, 4);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    FF x = random_element(F, rng);
    CHECK(F.frobenius(x, 0) == x);
    // oracle: repeated q-th powers
    FF y = x;
    for (uint32_t i = 0; i < F.n(); ++i) y = F.pow(y, F.q());
    CHECK(F.frobenius(x, F.n()) == x);
    CHECK(y == x);
  }
}

TEST_CASE("frobenius in GF(8) squares") {
  ExtField F = ExtField::make(2, 3);
  FF b = F.gen();
  CHECK(F.frobenius(b, 1) == F.mul(b, b));
}

TEST_CASE("frobenius is additive and multiplicative") {
  ExtField F = ExtField::make(2, 5);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    FF x = random_element(F, rng), y = random_element(F, rng);
    int l = static_cast<int>(rng.below(10));
    CHECK(F.frobenius(F.add(x, y), l) == F.add(F.frobenius(x, l), F.frobenius(y, l)));
    CHECK(F.frobenius(F.mul(x, y), l) == F.mul(F.frobenius(x, l), F.frobenius(y, l)));
  }
}

TEST_CASE("inv_frobenius round-trips") {
  ExtField F = ExtField::make(3, 3);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FF x = random_element(F, rng);
    int l = static_cast<int>(rng.below(7));
    CHECK(F.inv_frobenius(x, 0) == x);
    CHECK(F.frobenius(F.inv_frobenius(x, l), l) == x);
  }
}

TEST_CASE("inv_frobenius in GF(4)") {
  ExtField F = ExtField::make(2, 2);
  FF w = F.gen();
  // enumerate: the preimage of w under squaring is w^2
  FF w2 = F.mul(w, w);
  CHECK(F.frobenius(w2, 1) == w);
  CHECK(F.inv_frobenius(w, 1) == w2);
}

TEST_CASE("moore matrix of the dual basis inverts the moore matrix") {
  for (auto [q, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}, {4u, 2u}}) {
    ExtField F = ExtField::make(q, n);
    FieldBasis alpha = power_basis(F);
    FFMat M = moore_matrix(F, alpha, static_cast<int>(n));
    FieldBasis dual = dual_basis(F, alpha);
    FFMat Md = moore_matrix(F, dual, static_cast<int>(n));
    CHECK(ffmat_mul(F, M, ffmat_transpose(Md)) == ffmat_identity(F, static_cast<int>(n)));
  }
}

TEST_CASE("moore matrix rows are the first k rows, k = 1 applies no frobenius") {
  ExtField F = ExtField::make(2, 4);
  FieldBasis alpha = power_basis(F);
  FFMat m1 = moore_matrix(F, alpha, 1);
  for (uint32_t c = 0; c < 4; ++c) CHECK(m1.at(0, static_cast<int>(c)) == alpha.elems[c]);
  FFMat m3 = moore_matrix(F, alpha, 3);
  FFMat m4 = moore_matrix(F, alpha, 4);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) CHECK(m3.at(r, c) == m4.at(r, c));
  CHECK_THROWS_AS(moore_matrix(F, alpha, 5), std::invalid_argument);
  CHECK_THROWS_AS(moore_matrix(F, alpha, 0), std::invalid_argument);
}

TEST_CASE("GF(8) normal-basis moore matrix matches direct exponentiation") {
  ExtField F = ExtField::make(2, 3);
  FF b = F.gen();
  FF a = F.pow(b, 3);
  FieldBasis alpha{{a, F.pow(a, 2), F.pow(a, 4)}};
  REQUIRE(is_basis(F, alpha.elems));
  FFMat M = moore_matrix(F, alpha, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      uint64_t e = 1;
      for (int i = 0; i < r; ++i) e *= 2;
      CHECK(M.at(r, c) == F.pow(alpha.elems[static_cast<size_t>(c)], e));
    }
}

TEST_CASE("dual basis satisfies the trace orthogonality identity") {
  for (auto [q, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    ExtField F = ExtField::make(q, n);
    FieldBasis alpha = power_basis(F);
    FieldBasis beta = dual_basis(F, alpha);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        FF sum = F.zero();
        for (uint32_t l = 0; l < n; ++l)
          sum = F.add(sum, F.frobenius(F.mul(alpha.elems[i], beta.elems[j]), l));
        CHECK(sum == (i == j ? F.one() : F.zero()));
      }
  }
}

TEST_CASE("dual of the dual is the original basis") {
  ExtField F = ExtField::make(3, 3);
  FieldBasis alpha = power_basis(F);
  FieldBasis dd = dual_basis(F, dual_basis(F, alpha));
  CHECK(dd.elems == alpha.elems);
}

TEST_CASE("basis coefficient family has full rank") {
  ExtField F = ExtField::make(2, 3);
  FF b = F.gen();
  FF a = F.pow(b, 3);
  CHECK(is_basis(F, {a, F.pow(a, 2), F.pow(a, 4)}));
  CHECK_FALSE(is_basis(F, {a, a, F.pow(a, 4)}));
  CHECK_FALSE(is_basis(F, {F.one(), b, F.add(F.one(), b)}));
}

TEST_CASE("two-level tower GF(4^2) passes spot checks") {
  ExtField F = ExtField::make(4, 2);
  CHECK(F.q() == 4);
  CHECK(F.order() == 16);
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    FF x = random_nonzero(F, rng);
    CHECK(F.mul(x, F.inv(x)) == F.one());
    CHECK(F.frobenius(x, 2) == x);
    CHECK(F.frobenius(x, 1) == F.pow(x, 4));
  }
}

TEST_CASE("the GF(4) normal basis (w, w^2) is self-dual") {
  ExtField F = ExtField::make(2, 2);
  FF w = F.gen();
  FieldBasis nb{{w, F.mul(w, w)}};
  REQUIRE(is_basis(F, nb.elems));
  FieldBasis dual = dual_basis(F, nb);
  CHECK(dual.elems == nb.elems);
  // and directly by the trace identity
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      FF sum = F.zero();
      for (int l = 0; l < 2; ++l)
        sum = F.add(sum, F.frobenius(F.mul(nb.elems[static_cast<size_t>(i)],
                                           nb.elems[static_cast<size_t>(j)]), l));
      CHECK(sum == (i == j ? F.one() : F.zero()));
    }
}
