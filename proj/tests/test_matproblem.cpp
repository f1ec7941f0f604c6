#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "pcc/matproblem.hpp"

using namespace pcc;

namespace {

std::vector<CocentElement> all_cocent(const CocentShape& sh) {
  std::vector<CocentElement> out;
  CocentElement cur(sh);
  auto& c = cur.data();
  for (;;) {
    out.push_back(cur);
    std::size_t k = c.size();
    // last coordinate fastest, so the list is in increasing order
    while (k > 0 && ++c[k - 1] == sh.field()->size()) c[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<TruncAlgElement> all_units(const FieldPtr& K, const Partition& lam) {
  std::vector<TruncAlgElement> out;
  auto cur = TruncAlgElement::zero(K, lam);
  auto& c = cur.data();
  for (;;) {
    if (alg_is_unit(cur)) out.push_back(cur);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == K->size()) c[k++] = 0;
    if (k == c.size()) break;
  }
  return out;
}

// Orbit minimum of every element, by applying every pair of group elements.
std::map<std::vector<Elem>, std::vector<Elem>> brute_orbits(const CocentShape& sh) {
  auto left = all_units(sh.field(), sh.mu()), right = all_units(sh.field(), sh.nu());
  std::map<std::vector<Elem>, std::vector<Elem>> min_of;
  for (auto& v : all_cocent(sh)) {
    if (min_of.count(v.data())) continue;
    std::vector<std::vector<Elem>> orbit;
    for (auto& g : left)
      for (auto& h : right) orbit.push_back(act_right(act_left(g, v), h).data());
    auto m = *std::min_element(orbit.begin(), orbit.end());
    for (auto& o : orbit) min_of[o] = m;
  }
  return min_of;
}

CocentElement random_cocent(const CocentShape& sh, std::mt19937_64& rng) {
  CocentElement v(sh);
  for (auto& c : v.data()) c = static_cast<Elem>(rng() % sh.field()->size());
  return v;
}

}  // namespace

TEST_CASE("orbit enumeration examples") {
  for (auto K : {ff_make(2, 1), ff_make(3, 1), ff_make(2, 2), ff_make(5, 1)}) {
    auto o = enumerate_orbits(Partition({1}), Partition({1}), K);
    CHECK(o.count() == 2);
    CHECK(o.sizes == std::vector<std::uint64_t>{1, K->size() - 1});
  }
  auto F2 = Field::prime(2);
  auto o = enumerate_orbits(Partition({2}), Partition({2}), F2);
  REQUIRE(o.count() == 3);
  CHECK(o.reps[0].data() == std::vector<Elem>{0, 0});
  CHECK(o.reps[1].data() == std::vector<Elem>{0, 1});
  CHECK(o.reps[2].data() == std::vector<Elem>{1, 0});
  CHECK(o.total == 4);
  CHECK(enumerate_orbits(Partition({1}), Partition({1, 1}), Field::prime(3)).count() == 2);
  CHECK_THROWS_AS(enumerate_orbits(Partition({2, 2}), Partition({2, 2}), Field::prime(3), 1000), BudgetExceeded);
}

TEST_CASE("orbit enumeration matches brute force over the full groups") {
  auto F2 = Field::prime(2), F3 = Field::prime(3);
  std::vector<CocentShape> shapes = {
      CocentShape(Partition({2, 1}), Partition({2, 1}), F2), CocentShape(Partition({2}), Partition({1, 1}), F3),
      CocentShape(Partition({2, 1}), Partition({1}), F3),    CocentShape(Partition({3}), Partition({2, 1}), F2),
      CocentShape(Partition({1, 1}), Partition({2, 1}), F2), CocentShape(Partition({2}), Partition({3}), F3)};
  for (auto& sh : shapes) {
    CAPTURE(sh.mu().to_string());
    CAPTURE(sh.nu().to_string());
    auto brute = brute_orbits(sh);
    std::set<std::vector<Elem>> mins;
    for (auto& [v, m] : brute) mins.insert(m);
    auto o = enumerate_orbits(sh.mu(), sh.nu(), sh.field());
    REQUIRE(o.count() == mins.size());
    std::size_t i = 0;
    for (auto& m : mins) CHECK(o.reps[i++].data() == m);
    std::uint64_t sum = 0;
    for (auto s : o.sizes) sum += s;
    CHECK(sum == o.total);
    for (auto& [v, m] : brute) REQUIRE(canonical_form(CocentElement(sh, v)).data() == m);
  }
}

TEST_CASE("canonical_form properties") {
  auto F2 = Field::prime(2);
  CocentShape s(Partition({2}), Partition({2}), F2);
  CHECK(canonical_form(CocentElement(s)).is_zero());
  CHECK(canonical_form(CocentElement(s, {1, 1})).data() == std::vector<Elem>{1, 0});
  std::mt19937_64 rng(9);
  CocentShape big(Partition({3, 1}), Partition({2, 2}), Field::prime(3));
  for (int t = 0; t < 20; ++t) {
    auto v = random_cocent(big, rng);
    auto c = canonical_form(v);
    CHECK(canonical_form(c) == c);
    CHECK(!(v < c));
  }
}

TEST_CASE("finite-type canonical representatives are 0/1") {
  for (auto K : {ff_make(3, 1), ff_make(2, 2)})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (auto& mu : partitions_of(m))
          for (auto& nu : partitions_of(n))
            for (auto& rep : enumerate_orbits(mu, nu, K).reps) REQUIRE(rep.is_01());
}

TEST_CASE("orbit counts agree across small fields") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (auto& mu : partitions_of(m))
        for (auto& nu : partitions_of(n)) {
          auto c2 = orbit_count(mu, nu, ff_make(2, 1));
          CHECK(orbit_count(mu, nu, ff_make(3, 1)) == c2);
          CHECK(orbit_count(mu, nu, ff_make(2, 2)) == c2);
        }
}

TEST_CASE("structured reduction stays in the orbit and yields 0/1 entries") {
  std::mt19937_64 rng(10);
  CocentShape s22(Partition({2}), Partition({2}), Field::prime(2));
  CHECK(reduce_structured(CocentElement(s22)).result.is_zero());
  CHECK(reduce_structured(CocentElement(s22, {1, 1})).result.data() == std::vector<Elem>{1, 0});
  CocentShape s3(Partition({3}), Partition({2, 1}), Field::prime(2));
  for (int t = 0; t < 200; ++t) {
    auto v = random_cocent(s3, rng);
    auto r = reduce_structured(v).result;
    REQUIRE(canonical_form(r) == canonical_form(v));
    REQUIRE(r.is_01());
  }
  std::vector<CocentShape> shapes = {
      CocentShape(Partition({3, 1}), Partition({3, 2, 1}), Field::prime(3)),
      CocentShape(Partition({2, 1, 1}), Partition({2, 1, 1}), Field::prime(3)),
      CocentShape(Partition({4}), Partition({3, 3, 1}), ff_make(2, 2)),
      CocentShape(Partition({3, 1, 1}), Partition({4, 2}), Field::prime(2)),
      CocentShape(Partition({1, 1, 1}), Partition({2, 1}), Field::prime(5)),
      CocentShape(Partition({4, 1}), Partition({5, 3, 1}), Field::prime(3))};
  for (auto& sh : shapes) {
    CAPTURE(sh.mu().to_string());
    CAPTURE(sh.nu().to_string());
    for (int t = 0; t < 15; ++t) {
      auto v = random_cocent(sh, rng);
      auto res = reduce_structured(v);
      REQUIRE(res.result.is_01());
      REQUIRE(canonical_form(res.result, 1u << 24) == canonical_form(v, 1u << 24));
    }
  }
  CHECK_THROWS(reduce_structured(CocentElement(CocentShape(Partition({2, 2}), Partition({1}), Field::prime(2)))));
}

TEST_CASE("type classification") {
  CHECK(type_classify(Partition({3, 2}), Partition({7, 5, 3})).kind == TypeKind::Finite);
  CHECK(type_classify(Partition({4, 2}), Partition({4, 2})).kind == TypeKind::Infinite);
  CHECK(type_classify(Partition({5, 1}), Partition({9})).kind == TypeKind::Finite);
  CHECK(type_classify(Partition({2, 2, 2, 1}), Partition({6, 3})).kind == TypeKind::Finite);
  CHECK(type_classify(Partition({9, 3}), Partition({5, 2})).kind == TypeKind::Infinite);
  CHECK(type_classify(Partition({3, 3}), Partition({3, 3})).kind == TypeKind::Unknown);
  CHECK(type_classify(Partition({3, 3}), Partition({4, 2})).kind == TypeKind::Unknown);
}

TEST_CASE("wild invariant") {
  auto F3 = Field::prime(3);
  CocentShape sh(Partition({4, 2}), Partition({4, 2}), F3);
  auto make = [&](Elem a, Elem b, Elem g, Elem d) {
    CocentElement v(sh);
    v.set_coeff(0, 0, 2, a);
    v.set_coeff(0, 1, 1, b);
    v.set_coeff(1, 0, 1, g);
    v.set_coeff(1, 1, 0, d);
    return v;
  };
  CHECK(wild_invariant(make(1, 1, 1, 1)) == Elem{1});
  CHECK(wild_invariant(make(2, 1, 1, 1)) == Elem{2});
  CHECK(!wild_invariant(make(0, 1, 1, 1)));
  auto bad = make(1, 1, 1, 1);
  bad.set_coeff(0, 1, 0, 1);
  CHECK(!wild_invariant(bad));
  CHECK(!wild_invariant(CocentElement(CocentShape(Partition({2}), Partition({2}), F3))));

  auto gens = generators(Partition({4, 2}), F3);
  std::mt19937_64 rng(11);
  auto v = make(2, 1, 1, 1);
  v.set_coeff(0, 0, 3, 1);
  v.set_coeff(1, 1, 1, 2);
  for (int t = 0; t < 500; ++t) {
    auto& g = gens[rng() % gens.size()];
    v = (rng() & 1) ? act_left(g, v) : act_right(v, g);
    REQUIRE(wild_invariant(v) == Elem{2});
  }
}
