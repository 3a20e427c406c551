#include "signspectra/report.hpp"

#include <algorithm>
#include <cstdio>

#include "signspectra/io.hpp"

namespace signspectra {

namespace {

void write(const nlohmann::json& j, int depth, std::string& out) {
  const auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        write(it.value(), depth + 1, out);
      }
      out += '\n';
      pad(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      const bool flat = std::none_of(j.begin(), j.end(), [](const auto& v) { return v.is_structured(); });
      if (j.empty() || flat) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(j[i], depth, out);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        pad(depth + 1);
        write(j[i], depth + 1, out);
      }
      out += '\n';
      pad(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>() + 0.0);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

nlohmann::json one_based(const std::vector<Index>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Index i : v) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string to_report_text(const nlohmann::json& j) {
  std::string out;
  write(j, 0, out);
  out += '\n';
  return out;
}

nlohmann::json matrix_json(const Matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < a.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < a.n(); ++j) row.push_back(a(i, j) + 0.0);
    rows.push_back(std::move(row));
  }
  return {{"n", a.n()}, {"rows", rows}};
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

nlohmann::json eigenvalues_json(const std::vector<Complex>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : values) out.push_back(complex_json(z));
  return out;
}

nlohmann::json certificate_json(const JCertificate& cert) {
  return {{"j_set", one_based(cert.j_set)}, {"d", cert.d_signs}};
}

nlohmann::json signsym_json(const SignSymmetry& s) {
  nlohmann::json out;
  out["sign_symmetric"] = s.sign_symmetric();
  if (s.certificate) {
    out["certificate"] = certificate_json(*s.certificate);
    out["components"] = s.component_count;
  } else {
    out["odd_cycle"] = one_based(s.odd_cycle);
  }
  return out;
}

nlohmann::json frobenius_json(const FrobeniusForm& f) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : f.blocks) blocks.push_back({{"indices", one_based(b.indices)}, {"rho", b.rho}});
  return {{"perm", one_based(f.perm.images())}, {"blocks", blocks}, {"rho", f.rho}};
}

nlohmann::json wsets_json(const WCandidateSet& set) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : set.candidates) {
    nlohmann::json entry;
    const auto& [j, jt] = c.generators.front();
    entry["j"] = one_based(j);
    entry["jt"] = one_based(jt);
    entry["transitive"] = c.transitivity.transitive;
    if (c.transitivity.witness) {
      const auto& w = *c.transitivity.witness;
      entry["witness"] = {w[0] + 1, w[1] + 1, w[2] + 1};
    }
    candidates.push_back(std::move(entry));
  }
  return {{"candidates", candidates},
          {"pair_count", set.pair_count},
          {"a_certificate_count", set.a_certificate_count},
          {"compound_certificate_count", set.compound_certificate_count},
          {"exists_transitive", set.exists_transitive}};
}

nlohmann::json spectral_report_json(const Classification& c) {
  nlohmann::json out;
  out["eigenvalues"] = eigenvalues_json(c.spectrum.eigenvalues);
  out["rho"] = c.spectrum.rho;
  out["backward_error_bound"] = c.spectrum.backward_error_bound;

  nlohmann::json peripheral;
  peripheral["k"] = c.peripheral.count;
  peripheral["modulus"] = c.peripheral.modulus;
  peripheral["degenerate"] = c.peripheral.degenerate;
  peripheral["roots_of"] = c.peripheral.roots_of
                               ? nlohmann::json{{"k", c.peripheral.roots_of->k},
                                                {"rho_power", c.peripheral.roots_of->rho_power}}
                               : nlohmann::json(nullptr);
  out["peripheral"] = peripheral;

  out["theorem"] = theorem_name(c.theorem);
  nlohmann::json predictions = nlohmann::json::array();
  for (const auto& p : c.predictions)
    predictions.push_back({{"claim", p.claim}, {"verified", p.verified}, {"detail", p.detail}});
  out["predictions"] = predictions;
  out["diagnostics"] = c.diagnostics;
  out["verified"] = c.verified();
  out["tolerances"] = {{"rel_tol", c.options.rel_tol}, {"peripheral_tol", c.options.peripheral_tol}};
  out["h_a"] = c.h_a ? nlohmann::json(*c.h_a) : nlohmann::json(nullptr);
  out["h_compound"] = c.h_compound ? nlohmann::json(*c.h_compound) : nlohmann::json(nullptr);
  if (c.theorem == Theorem::kT11) {
    out["m"] = c.m;
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : c.groups) groups.push_back({{"indices", one_based(g.indices)}, {"k", g.k}});
    out["groups"] = groups;
  }
  return out;
}

nlohmann::json counterexample_json(const Matrix& a, const Classification& c) {
  nlohmann::json out;
  out["matrix"] = matrix_json(a);
  out["digest"] = matrix_digest(a);
  out["signsym_a"] = signsym_json(c.a_signsym);
  if (c.compound_signsym) out["signsym_compound"] = signsym_json(*c.compound_signsym);
  if (c.candidates) out["w_candidates"] = wsets_json(*c.candidates);
  out["eigenvalues"] = eigenvalues_json(c.spectrum.eigenvalues);
  out["theorem"] = theorem_name(c.theorem);
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& p : c.predictions)
    if (!p.verified) failed.push_back({{"claim", p.claim}, {"detail", p.detail}});
  out["failed_predictions"] = failed;
  return out;
}

nlohmann::json analysis_report_json(const Matrix& a, const Classification& c) {
  nlohmann::json out;
  out["input"] = {{"digest", matrix_digest(a)}, {"matrix", matrix_json(a)}};
  out["signsym"] = {{"a", signsym_json(c.a_signsym)},
                    {"compound", c.compound_signsym ? signsym_json(*c.compound_signsym) : nlohmann::json(nullptr)}};
  out["irreducible"] = {{"a", c.a_irreducible}, {"compound", c.compound_irreducible}};
  out["frobenius"] = c.frobenius ? frobenius_json(*c.frobenius) : nlohmann::json(nullptr);
  out["wsets"] = c.candidates ? wsets_json(*c.candidates) : nlohmann::json(nullptr);
  out["classification"] = spectral_report_json(c);
  if (!c.verified()) out["counterexample"] = counterexample_json(a, c);
  return out;
}

}  // namespace signspectra
