#include <doctest.h>

#include <cstdlib>
#include <random>
#include <tuple>

#include "oracles.hpp"
#include "psicalc/kgroup.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"

using namespace psicalc;

namespace {

Stratum S(std::vector<int> members, int r) { return Stratum::from_members(members, r); }

KClass single(const Stratum& J, int a) {
  KClass x(J.r());
  x.add(ICClass{J, a});
  return x;
}

}  // namespace

TEST_CASE("stratum basics") {
  CHECK_THROWS_AS(Stratum(0, 3), std::domain_error);
  CHECK_THROWS_AS(Stratum(0b1000, 3), std::domain_error);
  CHECK_THROWS_AS(Stratum::from_members({4}, 3), std::domain_error);
  CHECK(S({1, 3}, 3).size() == 2);
  CHECK(S({1, 3}, 3).to_string() == "{1,3}");
  CHECK(S({1}, 3).subset_of(S({1, 3}, 3)));
  CHECK(!S({2}, 3).subset_of(S({1, 3}, 3)));
  CHECK(S({1}, 3).adjacent_to(S({1, 3}, 3)));
  CHECK(!S({2}, 3).adjacent_to(S({1, 3}, 3)));

  // Lexicographic member order: {1} < {1,2} < {1,2,3} < {1,3} < {2}.
  const auto strata = all_strata(3);
  REQUIRE(strata.size() == 7);
  CHECK(strata[0] == S({1}, 3));
  CHECK(strata[1] == S({1, 2}, 3));
  CHECK(strata[2] == S({1, 2, 3}, 3));
  CHECK(strata[3] == S({1, 3}, 3));
  CHECK(strata[4] == S({2}, 3));
  CHECK(strata[5] == S({2, 3}, 3));
  CHECK(strata[6] == S({3}, 3));
}

TEST_CASE("shriek_to_ic expansions") {
  CHECK(shriek_to_ic(S({1}, 1), 0, 1) == single(S({1}, 1), 0));

  KClass expect2(2);
  expect2.add(ICClass{S({1}, 2), 0});
  expect2.add(ICClass{S({1, 2}, 2), 1});
  CHECK(shriek_to_ic(S({1}, 2), 0, 2) == expect2);

  KClass expect3(3);
  expect3.add(ICClass{S({1}, 3), 0});
  expect3.add(ICClass{S({1, 2}, 3), 1});
  expect3.add(ICClass{S({1, 3}, 3), 1});
  expect3.add(ICClass{S({1, 2, 3}, 3), 2});
  CHECK(shriek_to_ic(S({1}, 3), 0, 3) == expect3);

  for (int r = 1; r <= 6; ++r)
    for (const Stratum& I : all_strata(r))
      CHECK(shriek_to_ic(I, 0, r).term_count() == (1LL << (r - I.size())));

  CHECK_THROWS_AS(shriek_to_ic(S({1}, 2), 0, 3), std::domain_error);
}

TEST_CASE("ic_to_shriek matches the inclusion-exclusion oracle") {
  CHECK(ic_to_shriek(S({1}, 1), 0, 1).terms().size() == 1);

  ShKClass expect2(2);
  expect2.add(ICClass{S({1}, 2), 0});
  expect2.add(ICClass{S({1, 2}, 2), 1}, -1);
  CHECK(ic_to_shriek(S({1}, 2), 0, 2) == expect2);

  // Frozen from the oracle below: Sh({2};0) - Sh({1,2};1) - Sh({2,3};1) + Sh({1,2,3};2).
  ShKClass expect3(3);
  expect3.add(ICClass{S({2}, 3), 0});
  expect3.add(ICClass{S({1, 2}, 3), 1}, -1);
  expect3.add(ICClass{S({2, 3}, 3), 1}, -1);
  expect3.add(ICClass{S({1, 2, 3}, 3), 2});
  CHECK(ic_to_shriek(S({2}, 3), 0, 3) == expect3);

  for (int r = 1; r <= 5; ++r) {
    for (const Stratum& I : all_strata(r)) {
      for (int a = -2; a <= 2; ++a) {
        const auto expected = oracles::shriek_expansion_of_ic(I.members(), a, r);
        const ShKClass got = ic_to_shriek(I, a, r);
        REQUIRE(got.terms().size() == expected.size());
        for (const auto& [key, coeff] : expected)
          CHECK(got.coeff(ICClass{Stratum::from_members(key.first, r), key.second}) == coeff);
      }
    }
  }
}

TEST_CASE("round trips between the IC and shriek bases") {
  for (int r = 1; r <= 8; ++r) {
    for (const Stratum& I : all_strata(r)) {
      for (int a = -2; a <= 2; ++a) {
        CHECK(expand_shriek(ic_to_shriek(I, a, r)) == single(I, a));
        CHECK(to_shriek_basis(shriek_to_ic(I, a, r)).coeff(ICClass{I, a}) == 1);
        CHECK(to_shriek_basis(shriek_to_ic(I, a, r)).terms().size() == 1);
      }
    }
  }
}

TEST_CASE("star_to_ic and duality") {
  CHECK(star_to_ic(S({1, 2}, 2), 0, 2) == single(S({1, 2}, 2), 0));

  KClass expect(2);
  expect.add(ICClass{S({1}, 2), 0});
  expect.add(ICClass{S({1, 2}, 2), -1});
  CHECK(star_to_ic(S({1}, 2), 0, 2) == expect);

  for (int r = 1; r <= 6; ++r)
    for (const Stratum& I : all_strata(r)) {
      CHECK(dual(star_to_ic(I, 0, r)) == shriek_to_ic(I, 0, r));
      CHECK(dual(shriek_to_ic(I, 0, r)) == star_to_ic(I, 0, r));
    }

  CHECK(dual(single(S({1}, 1), 3)) == single(S({1}, 1), -3));
}

TEST_CASE("psi_class structure") {
  CHECK(psi_class(1) == single(S({1}, 1), 0));

  KClass expect2(2);
  expect2.add(ICClass{S({1}, 2), 0});
  expect2.add(ICClass{S({2}, 2), 0});
  expect2.add(ICClass{S({1, 2}, 2), 1});
  expect2.add(ICClass{S({1, 2}, 2), -1});
  CHECK(psi_class(2) == expect2);

  // Level twist sets: h=1 {0}; h=2 {1,-1}; h=3 {2,0,-2}.
  const KClass psi3 = psi_class(3);
  for (const auto& [c, m] : psi3.terms()) {
    CHECK(m == 1);
    const int h = c.stratum.size();
    CHECK(std::abs(c.twist) <= h - 1);
    CHECK((c.twist - (h - 1)) % 2 == 0);  // parity a = h-1 mod 2
  }

  for (int r = 1; r <= 10; ++r) {
    const KClass psi = psi_class(r);
    CHECK(psi.term_count() == static_cast<long long>(r) * (1LL << (r - 1)));
    for (const auto& [c, m] : psi.terms()) CHECK(m == 1);
    CHECK(dual(psi) == psi);
  }

  CHECK_THROWS_AS(psi_class(0), std::domain_error);
}

TEST_CASE("pI_class") {
  for (int r = 1; r <= 5; ++r) CHECK(pI_class(Stratum::full(r), r).is_zero());

  CHECK(pI_class(S({1}, 2), 2) == single(S({1, 2}, 2), 1));

  KClass expect(3);
  expect.add(ICClass{S({1, 2}, 3), 1});
  expect.add(ICClass{S({1, 3}, 3), 1});
  expect.add(ICClass{S({1, 2, 3}, 3), 2});
  CHECK(pI_class(S({1}, 3), 3) == expect);

  for (int r = 1; r <= 6; ++r)
    for (const Stratum& I : all_strata(r)) {
      const KClass p = pI_class(I, r);
      for (const auto& [c, m] : p.terms()) CHECK(m > 0);
    }
}

TEST_CASE("sheaf tables") {
  // Constant sheaf on a smooth branch closure: one entry on each stratum
  // containing it.
  const SheafTable t = to_sheaf_table(single(S({1}, 2), 0), 2);
  REQUIRE(t.rows().size() == 2);
  for (const Stratum& K : {S({1}, 2), S({1, 2}, 2)}) {
    const auto* row = t.row(K);
    REQUIRE(row != nullptr);
    REQUIRE(row->size() == 1);
    CHECK(row->begin()->first == 1);                      // twist
    CHECK(row->begin()->second.lead_codegree == 1);
    CHECK(row->begin()->second.display_mult() == 1);
  }
  CHECK(t.row(S({2}, 2)) == nullptr);

  // Full-stratum row of the nearby-cycles table at r = d = 4:
  // multiplicities 1,3,3,1 at twists 3,1,-1,-3 in codegrees 1..4.
  const SheafTable psi4 = to_sheaf_table(psi_class(4), 4);
  const auto* row = psi4.row(Stratum::full(4));
  REQUIRE(row != nullptr);
  REQUIRE(row->size() == 4);
  const std::vector<std::tuple<int, int, long long>> expected = {
      {-3, 4, 1}, {-1, 3, 3}, {1, 2, 3}, {3, 1, 1}};  // (twist, codegree, mult)
  int i = 0;
  for (const auto& [twist, entry] : *row) {
    CHECK(twist == std::get<0>(expected[i]));
    CHECK(entry.lead_codegree == std::get<1>(expected[i]));
    CHECK(entry.display_mult() == std::get<2>(expected[i]));
    ++i;
  }

  CHECK_THROWS_AS(to_sheaf_table(psi_class(3), 2), std::domain_error);
}

TEST_CASE("nearby-cycles table equals the stalk oracle on every stratum") {
  for (int r = 1; r <= 6; ++r) {
    for (int d : {r, r + 1}) {
      const SheafTable table = to_sheaf_table(psi_class(r), d);
      for (const Stratum& I : all_strata(r)) {
        const auto* row = table.row(I);
        const StalkTable oracle = psi_stalk_oracle(I, d);
        REQUIRE(row != nullptr);
        REQUIRE(row->size() == oracle.entries().size());
        for (const auto& [twist, entry] : oracle.entries()) {
          auto it = row->find(twist);
          REQUIRE(it != row->end());
          CHECK(it->second.lead_codegree == entry.lead_q + 1);
          CHECK(it->second.display_mult() == entry.display_mult());
        }
      }
    }
  }
}

TEST_CASE("sheaf table is injective: basis distinctness and exact inverse") {
  for (int r = 1; r <= 6; ++r) {
    std::vector<SheafTable> images;
    std::vector<ICClass> labels;
    for (const Stratum& J : all_strata(r))
      for (int a = -3; a <= 3; ++a) {
        images.push_back(to_sheaf_table(single(J, a), r));
        labels.push_back(ICClass{J, a});
      }
    for (size_t i = 0; i < images.size(); ++i)
      for (size_t j = i + 1; j < images.size(); ++j)
        CHECK(images[i] != images[j]);
  }

  // Inverse on deterministic pseudo-random virtual classes.
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const int d = r + static_cast<int>(rng() % 3);
    KClass x(r);
    const auto strata = all_strata(r);
    for (int t = 0; t < 8; ++t) {
      const Stratum& J = strata[rng() % strata.size()];
      const int a = static_cast<int>(rng() % 9) - 4;
      const long long coeff = static_cast<long long>(rng() % 11) - 5;
      x.add(ICClass{J, a}, coeff);
    }
    CHECK(from_sheaf_table(to_sheaf_table(x, d)) == x);
  }
}
