#include <random>

#include "doctest.h"
#include "pcc/field.hpp"
#include "pcc/poly.hpp"

using namespace pcc;

namespace {

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial(const Poly& f) {
  const auto& F = f.field();
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (;;) {
      Poly g(F, c);
      if ((f % g).is_zero()) return false;
      std::size_t k = 0;
      while (k < static_cast<std::size_t>(d) && ++c[k] == F->size()) c[k++] = 0;
      if (k == static_cast<std::size_t>(d)) break;
    }
  }
  return true;
}

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, F->size() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = d(rng);
  c.back() = 1;
  return Poly(F, c);
}

}  // namespace

TEST_CASE("arithmetic basics") {
  auto F = Field::prime(5);
  Poly a(F, {1, 2, 3}), b(F, {4, 0, 1});
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK((a - a).is_zero());
  CHECK(Poly(F, {0, 0, 0}).degree() == -1);
  CHECK(Poly::parse(F, "1,2,3") == a);
  CHECK(a.to_string() == "1,2,3");
  CHECK_THROWS(a.divmod(Poly(F)));
}

TEST_CASE("canonical polynomial order") {
  auto F = Field::prime(3);
  CHECK(Poly(F, {2, 1}) < Poly(F, {0, 0, 1}));
  CHECK(Poly(F, {0, 1}) < Poly(F, {1, 1}));
  CHECK(Poly(F, {1, 0, 1}) < Poly(F, {2, 1, 1}));
}

TEST_CASE("irreducibility agrees with trial division") {
  for (auto F : {ff_make(2, 1), ff_make(3, 1), ff_make(2, 2)}) {
    for (int d = 1; d <= 4; ++d) {
      auto list = irreducibles(F, d);
      std::size_t count = 0;
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
      c.back() = 1;
      for (;;) {
        Poly g(F, c);
        bool t = irreducible_by_trial(g);
        REQUIRE(is_irreducible(g) == t);
        count += t;
        std::size_t k = 0;
        while (k < static_cast<std::size_t>(d) && ++c[k] == F->size()) c[k++] = 0;
        if (k == static_cast<std::size_t>(d)) break;
      }
      CHECK(list.size() == count);
      CHECK(std::is_sorted(list.begin(), list.end()));
    }
  }
}

TEST_CASE("factorization examples") {
  auto F2 = Field::prime(2);
  // t^4 + t = t (t+1) (t^2+t+1)
  auto fac = poly_factor(Poly(F2, {0, 1, 0, 0, 1}));
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first == Poly(F2, {0, 1}));
  CHECK(fac[1].first == Poly(F2, {1, 1}));
  CHECK(fac[2].first == Poly(F2, {1, 1, 1}));
  // (t+1)^4 over F_2 has a p-th power structure
  auto sq = poly_factor(Poly(F2, {1, 0, 0, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 4);
  CHECK(least_irreducible(Field::prime(3), 2) == Poly(Field::prime(3), {1, 0, 1}));
}

TEST_CASE("factorization reconstructs random polynomials") {
  std::mt19937_64 rng(7);
  for (auto F : {ff_make(2, 1), ff_make(3, 1), ff_make(5, 1), ff_make(2, 2), ff_make(3, 2), ff_make(2, 3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly f = random_poly(F, 1 + static_cast<int>(rng() % 9), rng);
      if (trial % 4 == 0) f = f * f * random_poly(F, 2, rng);
      auto fac = poly_factor(f, trial);
      Poly prod = Poly::constant(F, 1);
      for (auto& [g, e] : fac) {
        REQUIRE(g.is_monic());
        REQUIRE(irreducible_by_trial(g));
        for (int i = 0; i < e; ++i) prod = prod * g;
      }
      REQUIRE(prod == f);
      REQUIRE(std::is_sorted(fac.begin(), fac.end(), [](auto& a, auto& b) { return a.first < b.first; }));
    }
  }
}
