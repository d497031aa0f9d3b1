#include <doctest.h>

#include <random>

#include "flagcover/errors.hpp"
#include "flagcover/matrix.hpp"
#include "flagcover/subspace.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(dist(rng));
  }
  return m;
}

Subspace random_subspace(const Field& f, std::size_t d, Rng& rng) {
  std::uniform_int_distribution<std::size_t> k(0, d);
  return Subspace::span(f, d, random_matrix(f, d, k(rng), rng, 2).columns());
}

}  // namespace

TEST_CASE("scalars are canonical") {
  const Field f5 = Field::prime(5);
  CHECK(Q.parse_scalar("6/4").to_string() == "3/2");
  CHECK(Q.parse_scalar("2/-4").to_string() == "-1/2");
  CHECK(Q.parse_scalar("-8/4").to_string() == "-2");
  CHECK(Q.parse_scalar("0/7").is_zero());
  CHECK(f5.parse_scalar("7").to_string() == "2");
  CHECK(f5.parse_scalar("-1").residue() == 4);
  CHECK(f5.parse_scalar("1/2").residue() == 3);
  CHECK_THROWS_AS(f5.parse_scalar("1/5"), ReductionFailure);
  CHECK_THROWS_AS(Q.parse_scalar("x"), InvalidArgument);
  CHECK_THROWS_AS(Q.parse_scalar("1/0"), InvalidArgument);
}

TEST_CASE("field arithmetic") {
  const Field f7 = Field::prime(7);
  const auto a = f7.from_int(3);
  CHECK((a * a.inverse()).is_one());
  CHECK((a / a).is_one());
  CHECK((a - a).is_zero());
  CHECK((-a).residue() == 4);
  CHECK_THROWS_AS(f7.zero().inverse(), InvalidArgument);
  const auto q = Q.parse_scalar("3/7");
  CHECK((q * Q.from_int(7)).to_string() == "3");
  CHECK_THROWS(Q.one() + f7.one());
}

TEST_CASE("field specs") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("fp:101").characteristic() == 101);
  CHECK(Field::prime(2).order() == 2u);
  CHECK_FALSE(Q.order().has_value());
  CHECK_THROWS_AS(Field::prime(4), InvalidArgument);
  CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
  CHECK_THROWS_AS(Field::prime((std::uint64_t{1} << 32) + 15), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("fp:x"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("complex"), InvalidArgument);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(Q, 3)) == 3);
  CHECK(rank(Matrix(Q, 2, 5)) == 0);
  Matrix m(Q, 2, 2);
  m(0, 0) = Q.from_int(1);
  m(0, 1) = Q.from_int(2);
  m(1, 0) = Q.from_int(2);
  m(1, 1) = Q.from_int(4);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
  Rng rng(5);
  for (const Field f : {Q, Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = random_matrix(f, 1 + trial % 5, 1 + (trial / 5) % 6, rng, 2);
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("rank over F_3 matches a brute-force count of the column span") {
  const Field f3 = Field::prime(3);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(f3, 3, 1 + trial % 4, rng, 1);
    CHECK(rank(m) == brute_dim(Subspace::span(f3, 3, m.columns())));
  }
}

TEST_CASE("inverse") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(Q, 4, 4, rng, 3);
    const auto inv = inverse(m);
    if (rank(m) < 4) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(*inv * m == Matrix::identity(Q, 4));
    // Bit-identical on recomputation.
    CHECK(*inverse(m) == *inv);
  }
}

TEST_CASE("intersect examples") {
  const auto e1 = unit_vector(Q, 3, 0);
  const auto e2 = unit_vector(Q, 3, 1);
  const auto e3 = unit_vector(Q, 3, 2);
  const auto a = span_of(Q, 3, {e1, e2});
  CHECK(intersect(a, span_of(Q, 3, {e2, e3})) == span_of(Q, 3, {e2}));
  CHECK(intersect(a, a) == a);
  CHECK(intersect(span_of(Q, 3, {e1}), span_of(Q, 3, {e2})).dim() == 0);
  CHECK_THROWS_AS(intersect(a, Subspace::whole(Q, 2)), DimensionMismatch);
}

TEST_CASE("member examples") {
  const auto a = span_of(Q, 3, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 1)});
  CHECK(member(unit_vector(Q, 3, 0), a));
  CHECK_FALSE(member(unit_vector(Q, 3, 2), a));
  CHECK(member(zero_vector(Q, 3), Subspace::zero(Q, 3)));
  CHECK(member(zero_vector(Q, 3), a));
}

TEST_CASE("subspaces have canonical bases") {
  const auto a = span_of(Q, 3, {vec(Q, {1, 1, 0}), vec(Q, {0, 1, 1})});
  const auto b = span_of(Q, 3, {vec(Q, {1, 0, -1}), vec(Q, {2, 3, 1})});
  CHECK(a == b);
  CHECK(a.basis().cols() == 2);
  CHECK(rank(a.basis()) == 2);
}

TEST_CASE("modular law on random subspaces") {
  Rng rng(17);
  for (const Field f : {Q, Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t d = 1 + trial % 6;
      const auto a = random_subspace(f, d, rng);
      const auto b = random_subspace(f, d, rng);
      const auto meet = intersect(a, b);
      CHECK(meet.dim() + sum(a, b).dim() == a.dim() + b.dim());
      CHECK(a.contains(meet));
      CHECK(b.contains(meet));
    }
  }
}

TEST_CASE("intersection over F_3 matches brute-force enumeration") {
  const Field f3 = Field::prime(3);
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_subspace(f3, 3, rng);
    const auto b = random_subspace(f3, 3, rng);
    std::size_t both = 0;
    for (const auto& v : all_vectors(f3, 3)) both += a.contains(v) && b.contains(v);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < intersect(a, b).dim(); ++i) expected *= 3;
    CHECK(both == expected);
  }
}

TEST_CASE("avoid_subspaces examples") {
  const auto e1 = unit_vector(Q, 2, 0);
  const auto e2 = unit_vector(Q, 2, 1);
  const auto w = Subspace::whole(Q, 2);
  const std::vector<Subspace> one{span_of(Q, 2, {e1})};
  CHECK(avoid_subspaces(w, one) == e2);
  const std::vector<Subspace> two{span_of(Q, 2, {e1}), span_of(Q, 2, {e2})};
  CHECK(avoid_subspaces(w, two) == vec(Q, {1, 1}));
  const auto line = span_of(Q, 2, {e1});
  const std::vector<Subspace> self{line};
  CHECK_THROWS_AS(avoid_subspaces(line, self), CoverageImpossible);
}

TEST_CASE("avoid_subspaces over F_2: three lines cover the plane") {
  const Field f2 = Field::prime(2);
  const std::vector<Subspace> lines{span_of(f2, 2, {vec(f2, {1, 0})}),
                                    span_of(f2, 2, {vec(f2, {0, 1})}),
                                    span_of(f2, 2, {vec(f2, {1, 1})})};
  CHECK_THROWS_AS(avoid_subspaces(Subspace::whole(f2, 2), lines), FieldTooSmall);
  // Two lines leave the third line's point.
  const std::vector<Subspace> first_two(lines.begin(), lines.begin() + 2);
  CHECK(avoid_subspaces(Subspace::whole(f2, 2), first_two) == vec(f2, {1, 1}));
}

TEST_CASE("avoid_subspaces outputs avoid everything, and fail only when nothing exists") {
  Rng rng(31);
  for (const Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t d = 1 + trial % 4;
      const auto w = random_subspace(f, d, rng);
      std::vector<Subspace> avoid;
      for (int k = 0; k < 1 + trial % 3; ++k) avoid.push_back(random_subspace(f, d, rng));
      bool contained = false;
      for (const auto& a : avoid) contained = contained || a.contains(w);
      if (contained) {
        CHECK_THROWS_AS(avoid_subspaces(w, avoid), CoverageImpossible);
        continue;
      }
      bool exists = f.is_rational();
      if (!f.is_rational()) {
        for (const auto& v : all_vectors(f, d)) {
          bool ok = w.contains(v);
          for (const auto& a : avoid) ok = ok && !a.contains(v);
          exists = exists || ok;
        }
      }
      if (!exists) {
        CHECK_THROWS_AS(avoid_subspaces(w, avoid), FieldTooSmall);
        continue;
      }
      const auto v = avoid_subspaces(w, avoid);
      CHECK(member(v, w));
      for (const auto& a : avoid) CHECK_FALSE(member(v, a));
      CHECK(avoid_subspaces(w, avoid) == v);
    }
  }
}

TEST_CASE("enumerate_avoiding returns an empty vector when nothing qualifies") {
  const Field f2 = Field::prime(2);
  const auto line = span_of(f2, 2, {vec(f2, {1, 1})});
  const std::vector<Subspace> avoid{line};
  CHECK(enumerate_avoiding(line, avoid).empty());
}
