#include <random>

#include "doctest.h"
#include "pcc/matrix.hpp"
#include "util.hpp"

using namespace pcc;
using testutil::det_leibniz;

TEST_CASE("parse, print and multiply") {
  auto F = Field::prime(3);
  auto a = Matrix::parse(F, "0 1; 1 0");
  CHECK(a.to_string() == "0 1;1 0");
  CHECK(a * a == Matrix::identity(F, 2));
  CHECK_THROWS_AS(Matrix::parse(F, "0 1; 1"), DimensionError);
  CHECK_THROWS_AS(a * Matrix(F, 3, 3), DimensionError);
  std::mt19937_64 rng(1);
  auto x = testutil::random_matrix(F, 3, 4, rng), y = testutil::random_matrix(F, 4, 2, rng);
  CHECK(x * y == testutil::naive_mul(x, y));
}

TEST_CASE("rank, kernel and inverse") {
  std::mt19937_64 rng(2);
  for (auto F : {ff_make(2, 1), ff_make(3, 1), ff_make(2, 2), ff_make(7, 1)}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      auto a = testutil::random_matrix(F, r, c, rng);
      auto k = kernel_basis(a);
      CHECK(k.rows() == c);
      CHECK(rank(a) + k.cols() == c);
      CHECK((a * k).is_zero());
      CHECK(rank(k) == k.cols());
      if (r == c) {
        bool inv = det_leibniz(a) != 0;
        CHECK(is_invertible(a) == inv);
        if (inv)
          CHECK(a * inverse(a) == Matrix::identity(F, r));
        else
          CHECK_THROWS_AS(inverse(a), SingularMatrix);
      }
    }
  }
}

TEST_CASE("char_poly matches det(xI - A) pointwise") {
  auto F3 = Field::prime(3);
  CHECK(char_poly(Matrix::parse(F3, "1 0; 0 2")) == Poly(F3, {2, 0, 1}));
  std::mt19937_64 rng(3);
  for (auto F : {ff_make(7, 1), ff_make(3, 2), ff_make(2, 3)}) {
    for (int t = 0; t < 25; ++t) {
      std::size_t n = 1 + rng() % 5;
      auto a = testutil::random_matrix(F, n, n, rng);
      auto cp = char_poly(a);
      REQUIRE(cp.degree() == static_cast<int>(n));
      REQUIRE(cp.is_monic());
      for (Elem x = 0; x < F->size(); ++x) {
        Matrix m = Matrix::identity(F, n).scaled(x) - a;
        REQUIRE(cp.eval(x) == det_leibniz(m));
      }
    }
  }
}

TEST_CASE("evaluate and power") {
  auto F = Field::prime(5);
  std::mt19937_64 rng(4);
  auto a = testutil::random_matrix(F, 3, 3, rng);
  // Cayley-Hamilton
  CHECK(evaluate(char_poly(a), a).is_zero());
  CHECK(power(a, 3) == a * a * a);
  CHECK(power(a, 0) == Matrix::identity(F, 3));
}

TEST_CASE("direct sums and block assembly") {
  auto F = Field::prime(2);
  auto a = Matrix::parse(F, "1 1; 0 1");
  auto b = Matrix::parse(F, "1");
  auto s = direct_sum(a, b);
  CHECK(s.to_string() == "1 1 0;0 1 0;0 0 1");
  auto g = block_assemble({{a, Matrix(F, 2, 1)}, {Matrix(F, 1, 2), b}});
  CHECK(g == s);
  CHECK(s.block(0, 0, 2, 2) == a);
}

TEST_CASE("conjugator finds X with XAX^-1 = B") {
  std::mt19937_64 rng(5);
  for (auto F : {ff_make(2, 1), ff_make(3, 1), ff_make(2, 2)}) {
    for (int t = 0; t < 10; ++t) {
      std::size_t n = 1 + rng() % 4;
      auto a = testutil::random_matrix(F, n, n, rng);
      auto x = testutil::random_invertible(F, n, rng);
      auto b = x * a * inverse(x);
      auto res = conjugator(a, b, t);
      REQUIRE(res.status == Similarity::Found);
      REQUIRE(res.conjugator);
      CHECK(*res.conjugator * a == b * *res.conjugator);
      CHECK(is_invertible(*res.conjugator));
    }
  }
  auto F = Field::prime(2);
  auto r = conjugator(Matrix::parse(F, "0 0; 0 0"), Matrix::parse(F, "0 1; 0 0"));
  CHECK(r.status == Similarity::NotSimilar);
}
