#include <doctest.h>

#include <set>

#include "pcc/classes.hpp"
#include "util.hpp"

using namespace pcc;

namespace {

Matrix M(const FieldPtr& f, const char* s) { return Matrix::parse(f, s); }

// |{(g,h) : gh = hg}| / |G| counts classes without using any generating set.
std::uint64_t commuting_pair_classes(const std::vector<Matrix>& group) {
  std::uint64_t pairs = 0;
  for (auto& g : group)
    for (auto& h : group)
      if (g * h == h * g) ++pairs;
  REQUIRE(pairs % group.size() == 0);
  return pairs / group.size();
}

std::vector<Matrix> parabolic_elements(int m, int n, const FieldPtr& f, bool affine) {
  std::vector<Matrix> out;
  const auto D = static_cast<std::size_t>(m + n);
  for (auto& g : testutil::all_matrices(f, D, D)) {
    if (!g.block(static_cast<std::size_t>(m), 0, static_cast<std::size_t>(n), static_cast<std::size_t>(m)).is_zero())
      continue;
    if (affine && g(0, 0) != 1) continue;
    if (is_invertible(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("levi pairs are products of GL class lists") {
  CHECK(levi_reps(1, 1, ff_make(2, 1)).size() == 1);
  CHECK(levi_reps(1, 2, ff_make(2, 1)).size() == 3);
  CHECK(levi_reps(1, 1, ff_make(3, 1)).size() == 4);
  CHECK_THROWS(levi_reps(0, 1, ff_make(2, 1)));
}

TEST_CASE("oracle agrees with commuting-pair counts") {
  struct C {
    int m, n;
    std::uint32_t q;
    bool affine;
  };
  for (auto c : {C{1, 1, 2, false}, C{1, 1, 3, false}, C{1, 2, 2, false}, C{1, 1, 4, false}, C{1, 2, 2, true},
                 C{1, 1, 5, true}}) {
    const auto [p, e] = split_prime_power(c.q);
    auto f = ff_make(p, e);
    const auto elems = parabolic_elements(c.m, c.n, f, c.affine);
    Oracle o(c.m, c.n, f, c.affine);
    CHECK(o.group_order() == elems.size());
    CHECK(o.count() == commuting_pair_classes(elems));
  }
}

TEST_CASE("oracle on P(2,2) over F_2") {
  auto f = ff_make(2, 1);
  Oracle o(2, 2, f);
  CHECK(o.group_order() == 576);
  const auto elems = parabolic_elements(2, 2, f, false);
  CHECK(o.count() == commuting_pair_classes(elems));
  CHECK_THROWS_AS(Oracle(2, 2, ff_make(3, 1), false, 1000), BudgetExceeded);
}

TEST_CASE("parabolic class counts") {
  auto f2 = ff_make(2, 1), f3 = ff_make(3, 1);
  CHECK(parabolic_class_count(1, 1, f2) == 2);
  CHECK(parabolic_class_count(1, 1, f3) == 6);
  CHECK(parabolic_class_count(1, 2, f2) == 5);
  CHECK(parabolic_class_count(2, 2, f2, 4) == parabolic_class_count(2, 2, f2, 1));
  struct C {
    int m, n;
    std::uint32_t q;
  };
  for (auto c : {C{1, 1, 2}, C{1, 1, 3}, C{1, 2, 2}, C{2, 1, 2}, C{1, 3, 2}, C{2, 2, 2}, C{1, 2, 3}, C{1, 1, 4}}) {
    const auto [p, e] = split_prime_power(c.q);
    auto f = ff_make(p, e);
    CHECK(parabolic_class_count(c.m, c.n, f) == Oracle(c.m, c.n, f).count());
  }
}

TEST_CASE("class representatives for P(1,1) over F_2") {
  auto f = ff_make(2, 1);
  auto reps = parabolic_class_reps(1, 1, f);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].matrix == M(f, "1 0;0 1"));
  CHECK(reps[1].matrix == M(f, "1 1;0 1"));
}

TEST_CASE("class representatives biject with oracle classes") {
  struct C {
    int m, n;
    std::uint32_t q;
  };
  for (auto c : {C{1, 1, 3}, C{1, 2, 2}, C{2, 1, 2}, C{2, 2, 2}, C{1, 2, 3}, C{1, 1, 4}}) {
    const auto [p, e] = split_prime_power(c.q);
    auto f = ff_make(p, e);
    Oracle o(c.m, c.n, f);
    std::set<std::size_t> hit;
    const auto reps = parabolic_class_reps(c.m, c.n, f);
    for (auto& r : reps) {
      CHECK(is_invertible(r.matrix));
      const auto M_ = static_cast<std::size_t>(c.m), N_ = static_cast<std::size_t>(c.n);
      CHECK(r.matrix.block(0, 0, M_, M_) == assemble(r.levi_a));
      CHECK(r.matrix.block(M_, M_, N_, N_) == assemble(r.levi_b));
      hit.insert(o.class_of(r.matrix));
    }
    CHECK(reps.size() == o.count());
    CHECK(hit.size() == o.count());
  }
}

TEST_CASE("GL class counts") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto [p, e] = split_prime_power(q);
    auto f = ff_make(p, e);
    CHECK(gl_class_count(0, f) == 1);
    CHECK(gl_class_count(1, f) == q - 1);
    CHECK(gl_class_count(2, f) == std::uint64_t{q} * q - 1);
  }
  CHECK(gl_class_count(3, ff_make(2, 1)) == 6);
}

TEST_CASE("AGL classes") {
  auto f2 = ff_make(2, 1);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto [p, e] = split_prime_power(q);
    CHECK(agl_class_count(1, ff_make(p, e)) == q);
  }
  CHECK(agl_class_count(2, f2) == 5);
  auto reps = agl_class_reps(1, f2);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == M(f2, "1 0;0 1"));
  CHECK(reps[1] == M(f2, "1 1;0 1"));
  struct C {
    int n;
    std::uint32_t q;
  };
  for (auto c : {C{1, 2}, C{1, 3}, C{2, 2}, C{2, 3}, C{3, 2}, C{2, 4}}) {
    const auto [p, e] = split_prime_power(c.q);
    auto f = ff_make(p, e);
    Oracle o(1, c.n, f, true);
    const auto r = agl_class_reps(c.n, f);
    std::set<std::size_t> hit;
    for (auto& g : r) hit.insert(o.class_of(g));
    CHECK(r.size() == agl_class_count(c.n, f));
    CHECK(hit.size() == r.size());
    CHECK(o.count() == r.size());
  }
}

TEST_CASE("prime power nodes") {
  CHECK(prime_powers(10) == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
}

TEST_CASE("interpolation recovers a known polynomial") {
  // 3q^4 - 2q + 7
  auto p = interpolate_counts([](std::uint64_t q) { return 3 * q * q * q * q - 2 * q + 7; }, 2);
  REQUIRE(p.degree() == 4);
  CHECK(p.coeffs[0] == 7);
  CHECK(p.coeffs[1] == -2);
  CHECK(p.coeffs[4] == 3);
  CHECK(p.to_string() == "3*q^4 - 2*q + 7");
  CHECK_THROWS_AS(interpolate_counts([](std::uint64_t q) { return q % 2; }, 1, 8), CountPolyError);
}

TEST_CASE("count polynomials") {
  auto p11 = count_poly(1, 1);
  CHECK(p11.to_string() == "q^2 - q");
  auto p12 = count_poly(1, 2);
  CHECK(p12.eval(2) == 5);
  CHECK(p12.eval(3) == parabolic_class_count(1, 2, ff_make(3, 1)));
}
