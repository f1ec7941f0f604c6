#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "pcc/canonical.hpp"
#include "util.hpp"

using namespace pcc;

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(Partition::parse("2,4,1") == Partition({4, 2, 1}));
  CHECK(Partition({3, 3, 1}).multiplicities() == std::vector<std::pair<int, int>>{{3, 2}, {1, 1}});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("companion and Jordan blocks") {
  auto F = Field::prime(3);
  Poly p(F, {1, 0, 1});  // t^2+1
  auto c = companion(p);
  CHECK(c.to_string() == "0 2;1 0");
  CHECK(char_poly(c) == p);
  auto j = jordan_block(p, 2);
  CHECK(j.to_string() == "0 2 0 0;1 0 0 0;1 0 0 2;0 1 1 0");
  CHECK(char_poly(j) == p * p);
  CHECK(!evaluate(p, j).is_zero());
  CHECK(evaluate(p * p, j).is_zero());
  CHECK_THROWS(jordan_block(Poly(F, {1, 2, 1}), 1));  // (t+1)^2
}

TEST_CASE("gjnf inverts assemble and is a conjugacy invariant") {
  std::mt19937_64 rng(11);
  for (auto F : {ff_make(2, 1), ff_make(3, 1), ff_make(2, 2)}) {
    for (int n = 1; n <= 4; ++n) {
      for (auto& g : enumerate_gjnf(n, F, false)) {
        auto a = assemble(g);
        REQUIRE(a.rows() == static_cast<std::size_t>(n));
        REQUIRE(gjnf(a) == g);
        auto x = testutil::random_invertible(F, static_cast<std::size_t>(n), rng);
        REQUIRE(gjnf(x * a * inverse(x)) == g);
      }
    }
  }
}

TEST_CASE("gjnf class counts match brute-force conjugation orbits") {
  for (auto [F, n] : {std::pair{ff_make(2, 1), 2}, {ff_make(3, 1), 2}, {ff_make(2, 1), 3}}) {
    auto all = testutil::all_matrices(F, n, n);
    std::vector<Matrix> group;
    for (auto& m : all)
      if (testutil::det_leibniz(m) != 0) group.push_back(m);
    std::map<std::vector<Elem>, int> orbit_id;
    int orbits = 0;
    std::map<int, std::set<std::string>> labels;
    for (auto& m : all) {
      if (orbit_id.count(m.entries())) continue;
      for (auto& x : group) orbit_id[(x * m * inverse(x)).entries()] = orbits;
      ++orbits;
    }
    std::set<std::string> distinct;
    for (auto& m : all) {
      auto g = gjnf(m);
      std::string key;
      for (auto& f : g.factors()) key += f.poly.to_string() + "|" + f.partition.to_string() + ";";
      labels[orbit_id[m.entries()]].insert(key);
      distinct.insert(key);
    }
    CHECK(static_cast<int>(distinct.size()) == orbits);
    for (auto& [id, s] : labels) CHECK(s.size() == 1);
    CHECK(enumerate_gjnf(n, F, false).size() == static_cast<std::size_t>(orbits));
  }
}

TEST_CASE("enumeration sizes") {
  // class numbers of M_n(F_q) and GL_n(F_q) for small n
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto [p, e] = split_prime_power(q);
    auto F = ff_make(p, e);
    CHECK(enumerate_gjnf(2, F, true).size() == q * q - 1);
    CHECK(enumerate_gjnf(3, F, true).size() == q * q * q - q);
    CHECK(enumerate_gjnf(2, F, false).size() == q * q + q);
    CHECK(enumerate_gjnf(3, F, false).size() == q * q * q + q * q + q);
  }
  CHECK(enumerate_gjnf(4, ff_make(2, 1), true).size() == 14);
  auto list = enumerate_gjnf(3, ff_make(3, 1), false);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) REQUIRE(!(list[i] == list[j]));
}
