#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "signspectra/exterior.hpp"
#include "signspectra/signsym.hpp"
#include "signspectra/spectrum.hpp"

using namespace signspectra;

namespace {

std::set<std::vector<Index>> as_set(const std::vector<std::vector<Index>>& v) { return {v.begin(), v.end()}; }

std::vector<Index> complement(const std::vector<Index>& j, Index n) {
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (!std::binary_search(j.begin(), j.end(), i)) out.push_back(i);
  return out;
}

Matrix random_sign_pattern(Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sign(-1, 1);
  Matrix a(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = sign(rng);
  return a;
}

// A pattern that is sign-symmetric by construction, with random zeros.
Matrix planted_pattern(Index n, std::mt19937_64& rng, double fill) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<int> d(n);
  for (auto& x : d) x = rng() & 1 ? -1 : 1;
  Matrix a(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (u(rng) < fill) a(i, j) = d[i] * d[j] * std::ceil(u(rng) * 4.0);
  return a;
}

}  // namespace

TEST_CASE("nonnegative matrices have the empty certificate") {
  const Matrix a{{1, 2}, {0, 3}};
  const SignSymmetry s = detect(a);
  REQUIRE(s.sign_symmetric());
  CHECK(s.certificate->j_set.empty());
  CHECK(s.certificate->d_signs == std::vector<int>{1, 1});
  CHECK(s.certificate->a_tilde == a);
}

TEST_CASE("two-node swap: canonical side keeps the smallest index outside J") {
  const Matrix a{{0, -1}, {-1, 0}};
  const SignSymmetry s = detect(a);
  REQUIRE(s.sign_symmetric());
  CHECK(s.certificate->j_set == std::vector<Index>{1});
  CHECK(s.certificate->d_signs == std::vector<int>{1, -1});
  CHECK(s.certificate->a_tilde == Matrix{{0, 1}, {1, 0}});
  const std::vector<Index> other{0};
  CHECK(verify_certificate(a, make_certificate(a, other)));
}

TEST_CASE("rotation by a quarter turn is not sign-symmetric") {
  const SignSymmetry s = detect(Matrix{{0, 1}, {-1, 0}});
  CHECK_FALSE(s.sign_symmetric());
  CHECK(s.odd_cycle.size() == 2);
  CHECK_THROWS_AS(enumerate_certificates(Matrix{{0, 1}, {-1, 0}}), NotSignSymmetricError);
}

TEST_CASE("negative diagonal entry is a one-cycle witness") {
  const SignSymmetry s = detect(Matrix{{1, 0, 0}, {0, -2, 0}, {0, 0, 1}});
  CHECK_FALSE(s.sign_symmetric());
  CHECK(s.odd_cycle == std::vector<Index>{1});
}

TEST_CASE("odd cycle witness really is odd") {
  // Triangle with one negative edge pair.
  const Matrix a{{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}};
  const SignSymmetry s = detect(a);
  REQUIRE_FALSE(s.sign_symmetric());
  int negatives = 0;
  const auto& c = s.odd_cycle;
  for (Index t = 0; t < c.size(); ++t) {
    const Index i = c[t], j = c[(t + 1) % c.size()];
    CHECK((a(i, j) != 0.0 || a(j, i) != 0.0));
    if (a(i, j) < 0.0 || a(j, i) < 0.0) ++negatives;
  }
  CHECK(negatives % 2 == 1);
}

TEST_CASE("five-cycle compound: four certificates") {
  const Matrix c = compound2(oracle::five_cycle()).values;
  const SignSymmetry s = detect(c);
  REQUIRE(s.sign_symmetric());
  CHECK(s.component_count == 2);
  const std::set<std::vector<Index>> listed{
      {0, 1, 4, 5, 7, 8, 9}, {2, 3, 6}, {0, 2, 4, 6, 7, 9}, {1, 3, 5, 8}};
  CHECK(listed.count(s.certificate->j_set) == 1);
  CHECK(s.certificate->j_set == std::vector<Index>{2, 3, 6});
  CHECK(as_set(enumerate_j_sets(c)) == listed);
  const auto certs = enumerate_certificates(c);
  CHECK(certs.size() == 4);
  for (const auto& cert : certs) CHECK(verify_certificate(c, cert));
  CHECK(SignConstraintGraph(c).certificate_count() == 4);
}

TEST_CASE("irreducible sign-symmetric matrix has exactly J and its complement") {
  const Matrix a{{0, -1, 0}, {0, 0, 2}, {-3, 0, 0}};
  const auto sets = enumerate_j_sets(a);
  REQUIRE(sets.size() == 2);
  CHECK(sets[1] == complement(sets[0], 3));
}

TEST_CASE("no off-diagonal constraints gives every subset") {
  const double d[] = {1.0, 0.0, 2.0};
  CHECK(enumerate_j_sets(Matrix::diagonal(d)).size() == 8);
  CHECK_THROWS_AS(enumerate_j_sets(Matrix::diagonal(d), 7), TooManyCertificatesError);
}

TEST_CASE("certificate verification") {
  const Matrix a{{0, -1}, {-1, 0}};
  const std::vector<Index> none;
  CHECK_FALSE(verify_certificate(a, make_certificate(a, none)));
  JCertificate bad = detect(a).certificate.value();
  bad.d_signs = {1, 1};
  CHECK_FALSE(verify_certificate(a, bad));
  CHECK_THROWS_AS(verify_certificate(Matrix::identity(3), detect(a).certificate.value()), std::invalid_argument);
}

TEST_CASE("detection agrees with exhaustive subset search") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const Index n = 1 + rng() % 9;
    const Matrix a = t % 2 ? random_sign_pattern(n, rng) : planted_pattern(n, rng, 0.4);
    const auto brute = oracle::sign_sets_by_search(a);
    const SignSymmetry s = detect(a);
    REQUIRE(s.sign_symmetric() == !brute.empty());
    if (!s.sign_symmetric()) continue;
    CHECK(verify_certificate(a, *s.certificate));
    CHECK(brute.count(s.certificate->j_set) == 1);
    CHECK(as_set(enumerate_j_sets(a)) == brute);
    CHECK(SignConstraintGraph(a).certificate_count() == brute.size());
  }
}

TEST_CASE("complement closure") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = planted_pattern(7, rng, 0.5);
    for (const auto& j : enumerate_j_sets(a)) {
      const auto jc = complement(j, 7);
      CHECK(verify_certificate(a, make_certificate(a, jc)));
    }
  }
}

TEST_CASE("principal submatrix certificates") {
  const Matrix a{{0, -1}, {-1, 0}};
  const JCertificate cert = make_certificate(a, std::vector<Index>{0});
  const Index all[] = {0, 1};
  const JCertificate sub = principal_submatrix_certificate(a, all, cert);
  CHECK(sub.j_set == std::vector<Index>{0});
  CHECK(verify_certificate(a, sub));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const Matrix b = planted_pattern(8, rng, 0.6);
    const JCertificate c = detect(b).certificate.value();
    std::vector<Index> alpha;
    for (Index i = 0; i < 8; ++i)
      if (rng() & 1) alpha.push_back(i);
    if (alpha.empty()) alpha.push_back(3);
    const JCertificate s = principal_submatrix_certificate(b, alpha, c);
    CHECK(verify_certificate(principal_submatrix(b, alpha), s));
  }
  const Index unsorted[] = {1, 0};
  CHECK_THROWS(principal_submatrix_certificate(a, unsorted, cert));
}

TEST_CASE("trace bound") {
  CHECK(trace_bound(Matrix::identity(4), detect(Matrix::identity(4)).certificate.value()) == 1.0);
  CHECK(trace_bound(oracle::five_cycle(), detect(oracle::five_cycle()).certificate.value()) == 0.0);
  const Matrix a{{1, -2}, {-3, 4}};
  const auto cert = detect(a).certificate.value();
  CHECK(trace_bound(a, cert) == 2.5);
  // Eigenvalues of [[1,2],[3,4]] by the quadratic formula.
  const double rho = (5.0 + std::sqrt(33.0)) / 2.0;
  CHECK(eigenvalues(a).rho == doctest::Approx(rho).epsilon(1e-12));
  CHECK(rho >= 2.5);
}

TEST_CASE("trace lower bound and spectral invariance on planted patterns") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = planted_pattern(6, rng, 0.5);
    const auto cert = detect(a).certificate.value();
    const Spectrum s = eigenvalues(a);
    CHECK(s.rho >= trace_bound(a, cert) - 1e-9 * std::max(1.0, s.rho));
    const auto m = match_multisets(s.eigenvalues, eigenvalues(cert.a_tilde).eigenvalues, 1e-6 * std::max(1.0, s.rho));
    CHECK(m.matched);
  }
}
