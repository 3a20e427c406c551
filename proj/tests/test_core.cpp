#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "signspectra/core.hpp"

using namespace signspectra;

TEST_CASE("matrix construction rejects bad shapes and values") {
  CHECK_THROWS_AS(Matrix(2, std::vector<double>{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS((Matrix{{1, NAN}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((Matrix{{1, INFINITY}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS(Matrix(kMaxDimension + 1));
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(a.n() == 2);
  CHECK(a(1, 0) == 3.0);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("matrix arithmetic") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(a + b == Matrix{{1, 3}, {4, 4}});
  CHECK(a.transposed() == Matrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5.0);
  CHECK(a.scaled(2.0) == Matrix{{2, 4}, {6, 8}});
  CHECK(a.is_nonnegative());
  CHECK_FALSE(Matrix{{1, -1}, {0, 1}}.is_nonnegative());
  CHECK(b.has_zero_diagonal());
  CHECK(Matrix::identity(2) * a == a);
  const double d[] = {2.0, 5.0};
  CHECK(Matrix::diagonal(d) == Matrix{{2, 0}, {0, 5}});
}

TEST_CASE("pair index on n = 5") {
  CHECK(pair_index(0, 1, 5) == 0);
  CHECK(pair_index(3, 4, 5) == 9);
  CHECK(pair_index(1, 3, 5) == 5);
  CHECK(pair_unindex(0, 5) == IndexPair{0, 1});
  CHECK(pair_unindex(9, 5) == IndexPair{3, 4});
  CHECK(pair_unindex(5, 5) == IndexPair{1, 3});
  CHECK_THROWS(pair_index(2, 2, 5));
  CHECK_THROWS(pair_index(3, 1, 5));
  CHECK_THROWS(pair_index(1, 5, 5));
  CHECK_THROWS(pair_unindex(10, 5));
}

TEST_CASE("pair indexer agrees with brute-force enumeration") {
  for (Index n : {2u, 3u, 7u, 20u, 64u}) {
    const PairIndexer idx(n);
    const auto pairs = oracle::lex_pairs(n);
    REQUIRE(idx.size() == pairs.size());
    REQUIRE(choose2(n) == pairs.size());
    for (Index alpha = 0; alpha < pairs.size(); ++alpha) {
      CHECK(idx.index(pairs[alpha].first, pairs[alpha].second) == alpha);
      CHECK(idx.unindex(alpha) == IndexPair{pairs[alpha].first, pairs[alpha].second});
    }
    CHECK(idx.pairs().size() == pairs.size());
  }
}

TEST_CASE("2x2 minors") {
  CHECK(minor2(Matrix{{1, 2}, {3, 4}}, 0, 1, 0, 1) == -2.0);
  CHECK(minor2(Matrix::identity(3), 0, 1, 0, 1) == 1.0);
  CHECK(minor2(oracle::five_cycle(), 0, 4, 0, 1) == -1.0);
  CHECK_THROWS(minor2(Matrix::identity(3), 1, 0, 0, 1));
  CHECK_THROWS(minor2(Matrix::identity(3), 0, 1, 2, 2));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = oracle::random_integer_matrix(4, -5, 5, rng);
    for (Index i = 0; i < 4; ++i)
      for (Index j = i + 1; j < 4; ++j)
        for (Index k = 0; k < 4; ++k)
          for (Index l = k + 1; l < 4; ++l) {
            const double m = minor2(a, i, j, k, l);
            CHECK(m == oracle::det2(a(i, k), a(i, l), a(j, k), a(j, l)));
            CHECK(oriented_minor2(a, i, j, l, k) == -m);
            CHECK(oriented_minor2(a, j, i, k, l) == -m);
          }
  }
}

TEST_CASE("permutations") {
  const Permutation p({2, 0, 1});
  CHECK(p.inverse() == Permutation({1, 2, 0}));
  const Matrix pm = p.to_matrix();
  CHECK(pm * pm.transposed() == Matrix::identity(3));
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3, 1}));

  std::mt19937_64 rng(5);
  const Matrix a = oracle::random_integer_matrix(5, -4, 4, rng);
  std::vector<Index> images{3, 1, 4, 0, 2};
  const Permutation q(images);
  CHECK(permute_similar(a, q) == q.to_matrix() * a * q.to_matrix().transposed());
}

TEST_CASE("principal submatrix") {
  const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const Index alpha[] = {0, 2};
  CHECK(principal_submatrix(a, alpha) == Matrix{{1, 3}, {7, 9}});
  const Index bad[] = {2, 0};
  CHECK_THROWS(principal_submatrix(a, bad));
  const Index out[] = {0, 3};
  CHECK_THROWS(principal_submatrix(a, out));
}

TEST_CASE("worker thread count honours the environment") {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  setenv("SIGNSPECTRA_THREADS", "3", 1);
  CHECK(worker_threads() == std::min(3u, hw));
  setenv("SIGNSPECTRA_THREADS", "1", 1);
  CHECK(worker_threads() == 1);
  unsetenv("SIGNSPECTRA_THREADS");
  CHECK(worker_threads() >= 1);
}
