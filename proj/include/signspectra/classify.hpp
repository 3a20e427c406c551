#pragma once

// Peripheral-spectrum classification of sign-symmetric matrices whose second
// compound is also sign-symmetric. Structural facts (irreducibility,
// transitive W sets, diagonal data, Frobenius blocks) select the theorem;
// every prediction it makes is then checked against the computed spectrum.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signspectra/core.hpp"
#include "signspectra/digraph.hpp"
#include "signspectra/signsym.hpp"
#include "signspectra/spectrum.hpp"
#include "signspectra/wsets.hpp"

namespace signspectra {

enum class Theorem { kT8_1, kT8_2, kT9_1, kT9_2, kT10, kT11, kNone };

std::string_view theorem_name(Theorem t);

struct Prediction {
  std::string claim;
  bool verified = false;
  std::string detail;
};

struct ClassifyOptions {
  double rel_tol = 1e-6;         // multiset matching and block radius comparison
  double peripheral_tol = kDefaultPeripheralTol;  // spectral-circle membership
  Index certificate_cap = kDefaultCertificateCap;
  Index candidate_cap = kDefaultCandidateCap;
};

/// One set of peripheral eigenvalues contributed by a Frobenius block.
struct PeripheralBlockGroup {
  std::vector<Index> indices;  // block indices in A
  Index k = 0;                 // imprimitivity index of the block
};

struct Classification {
  Theorem theorem = Theorem::kNone;
  std::vector<Prediction> predictions;
  std::vector<std::string> diagnostics;
  ClassifyOptions options;

  SignSymmetry a_signsym;
  std::optional<SignSymmetry> compound_signsym;
  std::optional<Matrix> compound;
  Index a_certificate_count = 0;
  Index compound_certificate_count = 0;

  bool a_irreducible = false;
  bool compound_irreducible = false;
  std::optional<FrobeniusForm> frobenius;
  std::optional<WCandidateSet> candidates;
  std::optional<bool> exists_transitive;

  std::optional<Index> h_a;
  std::optional<Index> h_compound;
  std::vector<PeripheralBlockGroup> groups;  // T11: one per block attaining rho
  Index m = 0;

  Spectrum spectrum;
  PeripheralGroup peripheral;

  bool verified() const;
};

/// Throws TooManyCertificatesError when the routing needs the W candidates
/// and they exceed the caps.
Classification classify(const Matrix& a, const ClassifyOptions& options = {});

struct SecondEigenvalueReport {
  bool applicable = false;
  Complex lambda1;
  Complex lambda2;
  std::vector<Prediction> claims;
};

/// lambda2 claims of the T8.1 / T9.1 / T10 paths, checked numerically.
SecondEigenvalueReport second_eigenvalue_claims(const Matrix& a, const Classification& c);

}  // namespace signspectra
