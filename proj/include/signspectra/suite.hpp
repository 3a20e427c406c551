#pragma once

// Verdict comparison and the corpus property suite shared by the CLI and
// the acceptance runner.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signspectra/classify.hpp"
#include "signspectra/gen.hpp"

namespace signspectra {

/// The parts of a classification that must survive a signed similarity.
struct Verdict {
  Theorem theorem = Theorem::kNone;
  Index k = 0;
  Index m = 0;
  std::vector<Index> group_sizes;
  std::vector<std::string> claims;
  std::vector<bool> verified;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verdict_of(const Classification& c);

struct SimilarityCheck {
  bool verdicts_equal = false;
  bool spectra_match = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return verdicts_equal && spectra_match; }
};

/// Compares the classifications of A and D A D; eigenvalues must agree within
/// rel_tol * max(1, rho).
SimilarityCheck similarity_check(const Classification& base, const Classification& conjugate,
                                 double rel_tol = 1e-12);

struct CorpusEntry {
  GenSpec spec;
  Matrix matrix;
  Classification classification;
  std::optional<SimilarityCheck> similarity;  // absent for scrambled specs
  std::vector<Index> scramble_j;
  bool passed = false;
};

/// Generates each spec, classifies it and its scrambled conjugate (J drawn
/// from seed), and records whether every prediction and the similarity
/// invariance hold.
CorpusEntry run_corpus_entry(const GenSpec& spec, std::uint64_t seed, const ClassifyOptions& options);

nlohmann::json corpus_entry_json(const CorpusEntry& e);

}  // namespace signspectra
