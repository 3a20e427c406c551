#include "signspectra/suite.hpp"

#include <algorithm>

#include "signspectra/io.hpp"
#include "signspectra/report.hpp"

namespace signspectra {

Verdict verdict_of(const Classification& c) {
  Verdict v;
  v.theorem = c.theorem;
  v.k = c.peripheral.count;
  v.m = c.m;
  for (const auto& g : c.groups) v.group_sizes.push_back(g.k);
  std::sort(v.group_sizes.begin(), v.group_sizes.end());
  for (const auto& p : c.predictions) {
    v.claims.push_back(p.claim);
    v.verified.push_back(p.verified);
  }
  return v;
}

SimilarityCheck similarity_check(const Classification& base, const Classification& conjugate, double rel_tol) {
  SimilarityCheck out;
  Verdict a = verdict_of(base), b = verdict_of(conjugate);
  // Group claims name block indices, which a similarity keeps fixed.
  out.verdicts_equal = a == b;
  out.tolerance = rel_tol * std::max(1.0, base.spectrum.rho);
  const auto match = match_multisets(base.spectrum.eigenvalues, conjugate.spectrum.eigenvalues, out.tolerance);
  out.spectra_match = match.matched;
  out.max_deviation = match.max_deviation;
  return out;
}

CorpusEntry run_corpus_entry(const GenSpec& spec, std::uint64_t seed, const ClassifyOptions& options) {
  CorpusEntry e;
  e.spec = spec;
  e.matrix = generate(spec);
  e.classification = classify(e.matrix, options);
  e.passed = e.classification.verified();
  if (spec.kind != GenKind::kScrambled) {
    e.scramble_j = random_subset(e.matrix.n(), seed ^ spec.seed);
    const Classification conj = classify(scrambled(e.matrix, e.scramble_j), options);
    e.similarity = similarity_check(e.classification, conj);
    e.passed = e.passed && conj.verified() && e.similarity->passed();
  }
  return e;
}

nlohmann::json corpus_entry_json(const CorpusEntry& e) {
  nlohmann::json out;
  out["spec"] = genspec_to_json(e.spec);
  out["digest"] = matrix_digest(e.matrix);
  out["n"] = e.matrix.n();
  out["theorem"] = theorem_name(e.classification.theorem);
  out["k"] = e.classification.peripheral.count;
  out["verified"] = e.classification.verified();
  if (e.similarity) {
    nlohmann::json js = nlohmann::json::array();
    for (Index i : e.scramble_j) js.push_back(i + 1);
    out["similarity"] = {{"j", js},
                         {"verdicts_equal", e.similarity->verdicts_equal},
                         {"spectra_match", e.similarity->spectra_match},
                         {"max_deviation", e.similarity->max_deviation},
                         {"tolerance", e.similarity->tolerance}};
  }
  out["passed"] = e.passed;
  if (!e.passed) out["counterexample"] = counterexample_json(e.matrix, e.classification);
  return out;
}

}  // namespace signspectra
