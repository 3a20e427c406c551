#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "signspectra/digraph.hpp"
#include "signspectra/exterior.hpp"
#include "signspectra/gen.hpp"
#include "signspectra/signsym.hpp"
#include "signspectra/spectrum.hpp"

using namespace signspectra;

TEST_CASE("rng is the standard 64-bit Mersenne Twister") {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
  Rng a(5489), b(5489);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
}

TEST_CASE("identical specs give bit-identical matrices") {
  GenSpec s;
  s.kind = GenKind::kNonnegIrreducible;
  s.n = 9;
  s.density = 0.3;
  s.seed = 99;
  CHECK(generate(s) == generate(s));
  GenSpec t = s;
  t.seed = 100;
  CHECK_FALSE(generate(s) == generate(t));
}

TEST_CASE("nonneg_irreducible contract") {
  const Matrix one = nonneg_irreducible(1, 0.0, 1.0, 3);
  CHECK(one(0, 0) > 0.0);
  const Matrix cyc = nonneg_irreducible(5, 0.0, 1.0, 4);
  CHECK(cyc.is_nonnegative());
  CHECK(is_irreducible(cyc));
  CHECK(imprimitivity_index(cyc).h == 5);
  Index nonzeros = 0;
  for (double v : cyc.data()) nonzeros += v != 0.0;
  CHECK(nonzeros == 5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Matrix a = nonneg_irreducible(6, 0.5, 2.0, seed);
    CHECK(a.is_nonnegative());
    CHECK(oracle::strongly_connected(a));
    const Index h = imprimitivity_index(a).h;
    CHECK(h >= 1);
    CHECK(h <= 6);
  }
}

TEST_CASE("cyclic_h contract") {
  for (Index n = 1; n <= 10; ++n)
    for (Index h = 1; h <= n; ++h) {
      const Matrix a = cyclic_h(n, h, 1000 * n + h);
      CHECK(a.is_nonnegative());
      CHECK(oracle::strongly_connected(a));
      CHECK(oracle::period_by_walks(a) == h);
    }
  CHECK_THROWS_AS(cyclic_h(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_h(3, 0, 1), std::invalid_argument);
  // h = 2 spectrum is symmetric under negation.
  const Spectrum s = eigenvalues(cyclic_h(4, 2, 8));
  std::vector<Complex> neg;
  for (const auto& z : s.eigenvalues) neg.push_back(-z);
  CHECK(match_multisets(s.eigenvalues, neg, 1e-9 * s.rho).matched);
}

TEST_CASE("tp2 contract") {
  const Matrix two = tp2(2, 5);
  CHECK(two(0, 0) * two(1, 1) - two(0, 1) * two(1, 0) > 0.0);
  const Matrix p = tp2(4, 0);
  CHECK(p == Matrix{{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 20}});
  // All C(4,2)^2 minors of the Pascal matrix by direct evaluation.
  const Matrix c = oracle::compound_by_definition(p);
  for (double v : c.data()) CHECK(v > 0.0);
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    const Matrix a = tp2(3 + seed % 4, seed);
    for (double v : a.data()) CHECK(v > 0.0);
    for (double v : oracle::compound_by_definition(a).data()) CHECK(v > 0.0);
  }
  CHECK_THROWS_AS(tp2(1, 1), std::invalid_argument);
}

TEST_CASE("scrambled contract") {
  const Matrix base = oracle::five_cycle();
  CHECK(scrambled(base, std::vector<Index>{}) == base);
  const std::vector<Index> j{0, 2};
  const Matrix s = scrambled(base, j);
  const auto sets = enumerate_j_sets(s);
  CHECK(std::find(sets.begin(), sets.end(), j) != sets.end());
  const SignSymmetry d = detect(s);
  REQUIRE(d.sign_symmetric());
  CHECK((d.certificate->j_set == j || d.certificate->j_set == std::vector<Index>{1, 3, 4}));
  CHECK(match_multisets(eigenvalues(s).eigenvalues, eigenvalues(base).eigenvalues, 1e-12).matched);
  CHECK_THROWS(scrambled(base, std::vector<Index>{5}));
}

TEST_CASE("scrambled conjugates keep the spectrum to 1e-12") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Matrix base = seed % 2 ? tp2(5, seed) : cyclic_h(7, 3, seed);
    const Matrix s = scrambled(base, random_subset(base.n(), seed));
    const Spectrum a = eigenvalues(base), b = eigenvalues(s);
    CHECK(match_multisets(a.eigenvalues, b.eigenvalues, 1e-12 * a.rho).matched);
  }
}

TEST_CASE("reducible_blocks and rescaling") {
  const std::vector<Matrix> blocks{tp2(2, 3), oracle::five_cycle()};
  const Matrix a = reducible_blocks(blocks, 0.5, false, 7);
  CHECK(a.n() == 7);
  CHECK_FALSE(is_irreducible(a));
  for (Index i = 0; i < 2; ++i)
    for (Index j = 2; j < 7; ++j) CHECK(a(i, j) == 0.0);
  const FrobeniusForm f = frobenius_form(reducible_blocks(blocks, 0.5, true, 7));
  CHECK(f.block_sizes().size() == 2);
  CHECK(eigenvalues(rescale_to_rho(tp2(4, 9), 2.5)).rho == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(rescale_to_rho(Matrix{{0, 1}, {0, 0}}, 3.0) == Matrix{{0, 1}, {0, 0}});
}

TEST_CASE("generate dispatches on the spec kind") {
  GenSpec base;
  base.kind = GenKind::kCyclicH;
  base.n = 6;
  base.h = 3;
  base.seed = 7;
  GenSpec scr;
  scr.kind = GenKind::kScrambled;
  scr.seed = 2;
  scr.children = {base};
  scr.j_set = std::vector<Index>{1, 2};
  CHECK(generate(scr) == scrambled(cyclic_h(6, 3, 7), *scr.j_set));
  GenSpec red;
  red.kind = GenKind::kReducibleBlocks;
  red.children = {base, base};
  CHECK(generate(red).n() == 12);
  GenSpec bad;
  bad.kind = GenKind::kScrambled;
  CHECK_THROWS(generate(bad));
}
