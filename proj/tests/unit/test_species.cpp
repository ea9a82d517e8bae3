#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "species/species.hpp"
#include "test_util.hpp"

using namespace gsp::species;
using gsp::seed::ExchangeMatrix;

TEST_CASE("finite abelian group characters") {
  FiniteAbelianGroup g{{2, 3}};
  CHECK(g.order() == 6);
  CHECK(g.character(4) == std::vector<int>{1, 1});
  CHECK(g.index_of({1, 2}) == 5);
  CHECK(g.inverse(g.index_of({1, 1})) == g.index_of({1, 2}));
  CHECK(g.character_label(5) == "1,2");
  CHECK(FiniteAbelianGroup{{}}.character_label(0) == "0");
  CHECK_THROWS_AS(g.index_of({2, 0}), gsp::Error);
}

TEST_CASE("dual bimodule") {
  CHECK(dual_bimodule({0, 1, {{0, 0}}}).mult == MultMatrix{{0}, {0}});
  CHECK(dual_bimodule({0, 1, {{3}}}).mult == MultMatrix{{3}});
  Bimodule d = dual_bimodule({0, 1, {{1, 2}}});
  CHECK(d.from == 1);
  CHECK(d.to == 0);
  CHECK(d.mult == MultMatrix{{1}, {2}});
  Bimodule m{0, 1, {{1, 0, 2}, {0, 4, 1}}};
  CHECK(dual_bimodule(dual_bimodule(m)).mult == m.mult);
}

TEST_CASE("tensor bimodule") {
  CHECK(tensor_bimodule({0, 1, {{0}}}, {1, 2, {{5}}}).mult == MultMatrix{{0}});
  CHECK(tensor_bimodule({0, 1, {{2}}}, {1, 2, {{3}}}).mult == MultMatrix{{6}});
  CHECK(tensor_bimodule({0, 1, {{1, 0}}}, {1, 2, {{0}, {1}}}).mult == MultMatrix{{0}});
  CHECK_THROWS_AS(tensor_bimodule({0, 1, {{1}}}, {2, 0, {{1}}}), gsp::Error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> u(0, 2);
  auto rnd = [&](std::size_t r, std::size_t c) {
    MultMatrix m = zero_mult(r, c);
    for (auto& row : m)
      for (int& x : row) x = u(rng);
    return m;
  };
  for (int t = 0; t < 20; ++t) {
    Bimodule a{0, 1, rnd(2, 3)}, b{1, 2, rnd(3, 4)}, c{2, 3, rnd(4, 1)};
    CHECK(tensor_bimodule(tensor_bimodule(a, b), c).mult == tensor_bimodule(a, tensor_bimodule(b, c)).mult);
    CHECK(dual_bimodule(tensor_bimodule(a, b)).mult ==
          tensor_bimodule(dual_bimodule(b), dual_bimodule(a)).mult);
  }
}

TEST_CASE("local and global freeness") {
  GroupSpecies c3 = testutil::c3_species();
  CHECK(is_locally_free(c3));
  auto r = bimodule_ranks(c3.mult[1][2]);
  REQUIRE(r);
  CHECK(r->left == 2);
  CHECK(r->right == 1);
  CHECK(is_globally_free(c3));

  GroupSpecies z = GroupSpecies::empty({1, 2}, {{{2}}, {{3}}});
  CHECK(is_locally_free(z));
  CHECK(bimodule_ranks(z.mult[0][1])->left == 0);

  CHECK_FALSE(bimodule_ranks({{1, 0}, {0, 0}}));
  GroupSpecies bad = GroupSpecies::empty({1, 2}, {{{2}}, {{2}}});
  bad.set_bimodule({0, 1, {{1, 0}, {0, 0}}});
  CHECK_FALSE(is_locally_free(bad));
  CHECK_THROWS_AS(exchange_matrix(bad), gsp::Error);

  GroupSpecies g = GroupSpecies::empty({1, 2}, {{{}}, {{2}}});
  g.set_bimodule({0, 1, {{2, 1}}});
  CHECK_FALSE(is_globally_free(g));
}

TEST_CASE("exchange matrix of species") {
  CHECK(exchange_matrix(testutil::c3_species()).b ==
        std::vector<std::vector<int>>{{0, -1, 0}, {1, 0, -1}, {0, 2, 0}});
  CHECK(exchange_matrix(GroupSpecies::empty({1, 2}, {{{}}, {{}}})).b ==
        std::vector<std::vector<int>>{{0, 0}, {0, 0}});
}

TEST_CASE("species from matrix") {
  auto b = ExchangeMatrix::from_rows({{0, 1}, {-2, 0}});
  GroupSpecies s = species_from_matrix(b, {1, 2});
  CHECK(s.mult[1][0] == MultMatrix{{1}, {1}});
  CHECK(is_zero(s.mult[0][1]));
  CHECK(exchange_matrix(s) == b);
  CHECK(exchange_matrix(species_from_matrix(ExchangeMatrix::from_rows({{0, 0}, {0, 0}}))).b ==
        std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  auto c3 = ExchangeMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 2, 0}});
  CHECK(exchange_matrix(species_from_matrix(c3, {1, 1, 2})) == c3);
  CHECK_THROWS_AS(species_from_matrix(c3, {1, 1, 1}), gsp::Error);

  // B = D S with the minimal symmetrizer: globally free.
  auto ds = ExchangeMatrix::from_rows({{0, 2, -4}, {-2, 0, 2}, {4, -2, 0}});
  GroupSpecies gs = species_from_matrix(ds);
  CHECK(is_globally_free(gs));
  CHECK(exchange_matrix(gs) == ds);
  auto ds2 = ExchangeMatrix::from_rows({{0, 1, -1}, {-2, 0, 2}, {3, -3, 0}});
  CHECK(gsp::seed::find_skew_symmetrizer(ds2) == std::vector<int>{1, 2, 3});
  CHECK(is_globally_free(species_from_matrix(ds2)));
  // Cyclic groups sharing a factor embed into the same subgroup of Z/n, so the bimodule is not free.
  CHECK_FALSE(is_globally_free(species_from_matrix(ds, {2, 2, 2})));
}

TEST_CASE("species round trip on random skew-symmetrizable matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto [b, d] = testutil::random_skew_symmetrizable(rng, 2 + t % 3);
    GroupSpecies s = species_from_matrix(b, d);
    CHECK(is_locally_free(s));
    CHECK(exchange_matrix(s) == b);
    // dim_K A_ij = left rank * #Gamma_i = right rank * #Gamma_j
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto r = bimodule_ranks(s.mult[i][j]);
        CHECK(r->left * s.groups[i].order() == total(s.mult[i][j]));
        CHECK(r->right * s.groups[j].order() == total(s.mult[i][j]));
      }
  }
}
