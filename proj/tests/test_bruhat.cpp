#include <doctest.h>

#include "flagcover/bruhat.hpp"
#include "flagcover/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

/// Over F_p by enumeration: sigma(i) is the least j such that V_j contains a
/// vector new for U_i.
std::vector<std::size_t> brute_sigma(const Flag& u, const Flag& v) {
  const std::size_t d = u.dim();
  std::vector<std::size_t> sigma(d, d + 1);
  for (const auto& x : all_vectors(u.field(), d)) {
    const std::size_t i = u.level_of(x);
    if (i == 0) continue;
    sigma[i - 1] = std::min(sigma[i - 1], v.level_of(x));
  }
  return sigma;
}

std::vector<std::size_t> reversal(std::size_t d) {
  std::vector<std::size_t> r;
  for (std::size_t i = 1; i <= d; ++i) r.push_back(d + 1 - i);
  return r;
}

}  // namespace

TEST_CASE("bruhat_perm of a flag with itself is the identity") {
  const auto u = random_flag(5, Q, 3);
  const auto sigma = bruhat_perm(u, u);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(sigma(i) == i);
}

TEST_CASE("transverse pairs give the reversal") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto t = random_transverse_tuple(2, d, Q, d).tuple;
    CHECK(bruhat_perm(t[0], t[1]).sigma == reversal(d));
    const PairGrid grid(t[0], t[1]);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) CHECK(grid(i, j) == (i + j > d ? i + j - d : 0));
    }
  }
}

TEST_CASE("bruhat_perm(V, U) is the inverse of bruhat_perm(U, V)") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = degenerate_tuple(2, 2 + seed % 5, seed);
    CHECK(bruhat_perm(t[1], t[0]) == bruhat_perm(t[0], t[1]).inverse());
  }
}

TEST_CASE("bruhat_perm over F_3 matches brute-force enumeration") {
  const Field f3 = Field::prime(3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto t = random_tuple(2, 1 + seed % 4, f3, seed, 1);
    CHECK(bruhat_perm(t[0], t[1]).sigma == brute_sigma(t[0], t[1]));
  }
}

TEST_CASE("bruhat_perm rejects mismatched flags") {
  CHECK_THROWS_AS(bruhat_perm(Flag::standard(2, Q), Flag::standard(3, Q)), DimensionMismatch);
  CHECK_THROWS_AS(bruhat_perm(Flag::standard(2, Q), Flag::standard(2, Field::prime(5))),
                  DimensionMismatch);
}

TEST_CASE("counting: dim(U_i ∩ V_k) = #{i' <= i : sigma(i') <= k}") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 1 + seed % 6;
    const auto t = seed % 2 ? degenerate_tuple(2, d, seed)
                            : random_tuple(2, d, Field::prime(2), seed, 1);
    const PairGrid grid(t[0], t[1]);
    const auto sigma = bruhat_perm(grid);
    REQUIRE(sigma.is_permutation());
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t k = 0; k <= d; ++k) {
        std::size_t count = 0;
        for (std::size_t ip = 1; ip <= i; ++ip) count += sigma(ip) <= k;
        CHECK(grid(i, k) == count);
      }
    }
  }
}

TEST_CASE("sigma(i) is the least j with a dimension jump") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t d = 2 + seed % 5;
    const auto t = degenerate_tuple(2, d, seed);
    const PairGrid grid(t[0], t[1]);
    const auto sigma = bruhat_perm(grid);
    for (std::size_t i = 1; i <= d; ++i) {
      CHECK(grid(i, sigma(i)) > grid(i - 1, sigma(i)));
      for (std::size_t j = 1; j < sigma(i); ++j) CHECK(grid(i, j) == grid(i - 1, j));
    }
  }
}

TEST_CASE("two_flag_generators on standard flags") {
  const auto s = Flag::standard(4, Q);
  const auto gens = two_flag_generators(s, s);
  CHECK(gens.size() == 4);
  CHECK(verify_generating_set(FlagTuple({s, s}), gens).pass);
}

TEST_CASE("two_flag_generators yields a basis of size d realizing sigma") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t d = 1 + seed % 8;
    const Field f = seed % 3 == 2 ? Field::prime(2) : Q;
    const auto t = seed % 2 ? random_tuple(2, d, f, seed) : random_tuple(2, d, f, seed, 1);
    const auto sigma = bruhat_perm(t[0], t[1]);
    const auto gens = two_flag_generators(t[0], t[1]);
    CHECK(gens.size() == d);
    CHECK(verify_generating_set(t, gens).pass);
    const auto vectors = gens.vectors();
    CHECK(Subspace::span(f, d, vectors).dim() == d);
    // Any basis realizing a permutation tau has tau(i) >= sigma(i); ours is sigma.
    const auto tau = permutation_from_basis(t[0], t[1], vectors);
    for (std::size_t i = 1; i <= d; ++i) CHECK(tau[i - 1] >= sigma(i));
    CHECK(tau == sigma.sigma);
  }
}

TEST_CASE("any basis adapted to U reads back a permutation no smaller than sigma") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 4;
    const auto t = degenerate_tuple(2, d, seed);
    const auto sigma = bruhat_perm(t[0], t[1]);
    // The basis of U itself is new for U_i at level i.
    const auto tau = permutation_from_basis(t[0], t[1], t[0].basis().columns());
    for (std::size_t i = 1; i <= d; ++i) CHECK(tau[i - 1] >= sigma(i));
  }
}

TEST_CASE("two_flag_generators on a tuple tags flag indices") {
  const auto t = random_tuple(4, 3, Q, 9);
  const auto gens = two_flag_generators(t, 2, 3);
  for (const auto& set : gens.sets) {
    REQUIRE(set.layers.size() == 2);
    CHECK(set.layers[0].flag == 2);
    CHECK(set.layers[1].flag == 3);
  }
  const auto single = two_flag_generators(t, 1, 1);
  CHECK(single.size() == 3);
  for (const auto& set : single.sets) CHECK(set.layers.size() == 1);
}
