#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "signspectra/exterior.hpp"
#include "signspectra/spectrum.hpp"
#include "signspectra/wsets.hpp"

using namespace signspectra;

namespace {

// The compound of the 5-cycle, as printed alongside the matrix it comes from.
const Matrix kPrintedCompound{
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, -1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},  {0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0}};

WSet random_wset(Index n, std::mt19937_64& rng) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) pairs.push_back(rng() & 1 ? IndexPair{i, j} : IndexPair{j, i});
  return WSet::from_pairs(n, pairs);
}

}  // namespace

TEST_CASE("five-cycle compound matches the printed 10x10 matrix") {
  const CompoundMatrix c = compound2(oracle::five_cycle());
  CHECK(c.base_n == 5);
  CHECK(c.m() == 10);
  CHECK(c.values == kPrintedCompound);
}

TEST_CASE("compound small cases") {
  CHECK(compound2(Matrix::identity(3)).values == Matrix::identity(3));
  CHECK(compound2(Matrix{{2, 0}, {0, 3}}).values == Matrix{{6}});
  CHECK_THROWS_AS(compound2(Matrix{{1}}), std::invalid_argument);
  CHECK_THROWS_AS(compound2(Matrix(kMaxCompoundBase + 1)), std::invalid_argument);
}

TEST_CASE("compound agrees with the minor-by-minor definition") {
  std::mt19937_64 rng(3);
  for (Index n = 2; n <= 8; ++n)
    for (int t = 0; t < 5; ++t) {
      const Matrix a = oracle::random_integer_matrix(n, -6, 6, rng, 0.3);
      CHECK(compound2(a).values == oracle::compound_by_definition(a));
    }
}

TEST_CASE("compound is multiplicative and homogeneous of degree two") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = oracle::random_integer_matrix(5, -3, 3, rng);
    const Matrix b = oracle::random_integer_matrix(5, -3, 3, rng);
    // Integer inputs keep every quantity exact.
    CHECK(compound2(a * b).values == compound2(a).values * compound2(b).values);
    CHECK(compound2(a.scaled(3.0)).values == compound2(a).values.scaled(9.0));
  }
}

TEST_CASE("compound is bit-identical across thread counts") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(60);
  for (Index i = 0; i < 60; ++i)
    for (Index j = 0; j < 60; ++j) a(i, j) = u(rng);
  setenv("SIGNSPECTRA_THREADS", "1", 1);
  const Matrix one = compound2(a).values;
  setenv("SIGNSPECTRA_THREADS", "7", 1);
  const Matrix seven = compound2(a).values;
  unsetenv("SIGNSPECTRA_THREADS");
  CHECK(one == seven);
}

TEST_CASE("W-matrix for the lexicographic set is the compound") {
  const Matrix a = oracle::five_cycle();
  const WMatrix w = w_matrix(a, canonical_m(5));
  CHECK(w.values == kPrintedCompound);
  CHECK(w.pair_order.size() == 10);
}

TEST_CASE("W-matrix of the identity is the identity") {
  std::mt19937_64 rng(9);
  for (Index n = 2; n <= 6; ++n) {
    const WMatrix w = w_matrix(Matrix::identity(n), random_wset(n, rng));
    CHECK(w.values == Matrix::identity(choose2(n)));
  }
}

TEST_CASE("W-matrix for the reversed set is a relabelled compound") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = oracle::random_integer_matrix(4, -3, 3, rng);
    std::vector<IndexPair> rev;
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < i; ++j) rev.emplace_back(i, j);
    const WMatrix w = w_matrix(a, WSet::from_pairs(4, rev));
    // Entry for pairs (j,i),(l,k) with both orientations flipped: same value
    // as the compound entry for (i,j),(k,l).
    const Matrix c = compound2(a).values;
    for (Index r = 0; r < w.m(); ++r)
      for (Index s = 0; s < w.m(); ++s) {
        const auto [i, j] = w.pair_order[r];
        const auto [k, l] = w.pair_order[s];
        CHECK(w.values(r, s) == c(pair_index(j, i, 4), pair_index(l, k, 4)));
      }
    const auto diff = match_multisets(eigenvalues(w.values).eigenvalues, eigenvalues(c).eigenvalues, 1e-8 * 100);
    CHECK(diff.matched);
  }
}

TEST_CASE("W-matrix rejects mismatched dimensions") {
  CHECK_THROWS(w_matrix(Matrix::identity(3), canonical_m(4)));
}

TEST_CASE("exterior products") {
  const std::vector<double> e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(exterior_product(e1, e2, canonical_m(3)) == std::vector<double>{1, 0, 0});
  const std::vector<double> x{1, 2, 3}, y{4, 5, 6};
  CHECK(exterior_product(x, x, canonical_m(3)) == std::vector<double>{0, 0, 0});
  CHECK(exterior_product(x, y, canonical_m(3)) == std::vector<double>{-3, -6, -3});
  std::vector<IndexPair> flipped{{1, 0}, {0, 2}, {2, 1}};
  // Stored pairs in lexicographic order: (1,3), (2,1), (3,2).
  CHECK(exterior_product(x, y, WSet::from_pairs(3, flipped)) == std::vector<double>{-6, 3, 3});
  const std::vector<double> short_y{1, 2};
  CHECK_THROWS(exterior_product(x, short_y, canonical_m(3)));
}

TEST_CASE("eigenvalue products: diagonal and five-cycle") {
  const double d[] = {1.0, 2.0, 3.0};
  const auto diag = verify_eigenvalue_products(Matrix::diagonal(d), canonical_m(3));
  CHECK(diag.matched);
  CHECK(oracle::sorted_distance(diag.w_eigenvalues, {2.0, 3.0, 6.0}) < 1e-12);

  const auto cyc = verify_eigenvalue_products(oracle::five_cycle(), canonical_m(5));
  CHECK(cyc.matched);
  CHECK(cyc.products.size() == 10);
}

TEST_CASE("eigenvalue products hold for random W sets") {
  std::mt19937_64 rng(12);
  for (Index n : {4u, 5u})
    for (int t = 0; t < 10; ++t) {
      const Matrix a = oracle::random_integer_matrix(n, -5, 5, rng);
      for (int k = 0; k < 3; ++k) CHECK(verify_eigenvalue_products(a, random_wset(n, rng)).matched);
    }
}
