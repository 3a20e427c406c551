#pragma once

// JSON documents emitted by the command-line tool. Indices are 1-based.

#include <string>

#include <json.hpp>

#include "signspectra/classify.hpp"
#include "signspectra/digraph.hpp"
#include "signspectra/signsym.hpp"
#include "signspectra/spectrum.hpp"
#include "signspectra/wsets.hpp"

namespace signspectra {

/// Serializes with sorted keys, two-space indentation and every
/// floating-point number printed with 17 significant digits.
std::string to_report_text(const nlohmann::json& j);

nlohmann::json matrix_json(const Matrix& a);
nlohmann::json complex_json(Complex z);
nlohmann::json eigenvalues_json(const std::vector<Complex>& values);

/// {j_set, d} when sign-symmetric, otherwise {odd_cycle}.
nlohmann::json certificate_json(const JCertificate& cert);
nlohmann::json signsym_json(const SignSymmetry& s);

/// {perm, blocks: [{indices, rho}]}; perm[r] is the original index at position r.
nlohmann::json frobenius_json(const FrobeniusForm& f);

/// One entry per candidate: {j, jt, transitive, witness?}.
nlohmann::json wsets_json(const WCandidateSet& set);

nlohmann::json spectral_report_json(const Classification& c);

/// Matrix, certificates, W candidates, spectrum and the failed claims.
nlohmann::json counterexample_json(const Matrix& a, const Classification& c);

/// Full pipeline report; includes a counterexample bundle when a claim fails.
nlohmann::json analysis_report_json(const Matrix& a, const Classification& c);

}  // namespace signspectra
