#include <set>

#include "doctest.h"
#include "pcc/field.hpp"
#include "pcc/poly.hpp"

using namespace pcc;

namespace {

void check_axioms(const Field& F) {
  const Elem q = F.size();
  for (Elem a = 0; a < q; ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    for (Elem b = 0; b < q; ++b) {
      REQUIRE(F.add(a, b) == F.add(b, a));
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      for (Elem c = 0; c < q; c += 1 + q / 7) {
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      }
    }
  }
}

int mult_order(const Field& F, Elem a) {
  Elem x = a;
  int k = 1;
  while (x != 1) {
    x = F.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("prime fields") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
    auto F = Field::prime(p);
    CHECK(F->size() == p);
    CHECK(F->degree() == 1);
    for (Elem a = 0; a < p; ++a)
      for (Elem b = 0; b < p; ++b) REQUIRE(F->mul(a, b) == (a * b) % p);
    CHECK(mult_order(*F, F->primitive()) == static_cast<int>(p - 1));
  }
  CHECK_THROWS_AS(Field::prime(6), FieldError);
  CHECK_THROWS_AS(Field::prime(2)->inv(0), FieldError);
}

TEST_CASE("ff_make picks the least modulus") {
  CHECK(ff_make(3, 2)->modulus() == std::vector<Elem>{1, 0, 1});
  CHECK(ff_make(2, 2)->modulus() == std::vector<Elem>{1, 1, 1});
  CHECK(ff_make(2, 3)->modulus() == std::vector<Elem>{1, 0, 1, 1});  // t^3+t^2+1 precedes t^3+t+1
  CHECK(ff_make(5, 1)->is_prime());
  CHECK_THROWS(split_prime_power(12));
  CHECK(split_prime_power(27) == std::pair<std::uint32_t, std::uint32_t>{3, 3});
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u}, {3u, 3u}}) {
    auto F = ff_make(p, e);
    CAPTURE(F->size());
    check_axioms(*F);
    CHECK(mult_order(*F, F->primitive()) == static_cast<int>(F->size() - 1));
    // Frobenius is additive
    for (Elem a = 0; a < F->size(); ++a)
      for (Elem b = 0; b < F->size(); ++b)
        REQUIRE(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
  }
}

TEST_CASE("tower extension") {
  auto F4 = ff_make(2, 2);
  auto m = least_irreducible(F4, 2);
  auto F16 = Field::extension(F4, m.coeffs());
  CHECK(F16->size() == 16);
  CHECK(F16->degree() == 4);
  CHECK(F16->relative_degree() == 2);
  check_axioms(*F16);
  // the generator is a root of the modulus
  Elem w = F16->generator();
  Elem val = 0;
  for (std::size_t i = m.coeffs().size(); i-- > 0;)
    val = F16->add(F16->mul(val, w), m.coeffs()[i]);  // base codes embed as low codes
  CHECK(val == 0);
  CHECK_THROWS_AS(Field::extension(F4, {1, 0, 1}), FieldError);  // t^2+1 = (t+1)^2
}

TEST_CASE("codes, coefficients and formatting round-trip") {
  auto F = ff_make(3, 2);
  std::set<std::string> seen;
  for (Elem a = 0; a < F->size(); ++a) {
    auto c = F->coeffs(a);
    CHECK(F->from_coeffs(c) == a);
    auto s = F->format(a);
    CHECK(F->parse(s) == a);
    seen.insert(s);
  }
  CHECK(seen.size() == 9);
  CHECK(F->format(F->generator()) == "0+1*w");
  auto basis = F->prime_basis();
  CHECK(basis.size() == 2);
}

TEST_CASE("FieldElement rejects mixed fields") {
  FieldElement a(ff_make(2, 2), 2), b(ff_make(3, 1), 1);
  CHECK_THROWS_AS(a + b, FieldError);
  FieldElement c(a.field(), 3);
  CHECK((a * c).code() == a.field()->mul(2, 3));
}
