#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "signspectra/classify.hpp"
#include "signspectra/exterior.hpp"
#include "signspectra/io.hpp"
#include "signspectra/report.hpp"
#include "signspectra/suite.hpp"

using namespace signspectra;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailure = 2;

struct Options {
  std::string path;
  std::string format;
  double rel_tol = 1e-6;
  double peripheral_tol = kDefaultPeripheralTol;
  Index cap = kDefaultCandidateCap;
  std::uint64_t seed = 1;
  bool all = false;
  std::string output;
};

ClassifyOptions classify_options(const Options& o) {
  ClassifyOptions c;
  c.rel_tol = o.rel_tol;
  c.peripheral_tol = o.peripheral_tol;
  c.candidate_cap = o.cap;
  return c;
}

MatrixFormat output_format(const Options& o) {
  return o.format.empty() ? MatrixFormat::kCsv : *parse_format_name(o.format);
}

void emit(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Matrix load(const Options& o) { return read_matrix_file(o.path); }

int cmd_analyze(const Options& o) {
  const Matrix a = load(o);
  const Classification c = classify(a, classify_options(o));
  emit(to_report_text(analysis_report_json(a, c)), o);
  return c.verified() ? kOk : kVerificationFailure;
}

int cmd_compound(const Options& o) {
  emit(emit_matrix(compound2(load(o)).values, output_format(o)), o);
  return kOk;
}

int cmd_signsym(const Options& o) {
  const Matrix a = load(o);
  const SignSymmetry s = detect(a);
  nlohmann::json out;
  out["sign_symmetric"] = s.sign_symmetric();
  if (s.certificate) {
    const auto cert = certificate_json(*s.certificate);
    out["j_set"] = cert["j_set"];
    out["d"] = cert["d"];
    out["components"] = s.component_count;
    if (o.all) {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& c : enumerate_certificates(a, o.cap)) all.push_back(certificate_json(c));
      out["certificates"] = all;
    }
  } else {
    nlohmann::json cycle = nlohmann::json::array();
    for (Index i : s.odd_cycle) cycle.push_back(i + 1);
    out["odd_cycle"] = cycle;
  }
  emit(to_report_text(out), o);
  return kOk;
}

int cmd_frobenius(const Options& o) {
  emit(to_report_text(frobenius_json(frobenius_form(load(o)))), o);
  return kOk;
}

int cmd_wsets(const Options& o) {
  emit(to_report_text(wsets_json(enumerate_w_candidates(load(o), o.cap))), o);
  return kOk;
}

int cmd_classify(const Options& o) {
  const Matrix a = load(o);
  const Classification c = classify(a, classify_options(o));
  nlohmann::json out = spectral_report_json(c);
  if (!c.verified()) out["counterexample"] = counterexample_json(a, c);
  emit(to_report_text(out), o);
  return c.verified() ? kOk : kVerificationFailure;
}

int cmd_verify(const Options& o) {
  const Matrix a = load(o);
  const Classification c = classify(a, classify_options(o));
  std::string text;
  text += std::string("theorem ") + std::string(theorem_name(c.theorem)) + "\n";
  for (const auto& p : c.predictions) text += (p.verified ? "VERIFIED " : "FAILED   ") + p.claim + "\n";
  for (const auto& d : c.diagnostics) text += "note     " + d + "\n";
  if (!c.verified()) text += to_report_text(counterexample_json(a, c));
  emit(text, o);
  return c.verified() ? kOk : kVerificationFailure;
}

int cmd_gen(const Options& o, const std::string& spec_text, bool seed_given) {
  const std::string text = spec_text.starts_with("@") ? read_text(spec_text.substr(1)) : spec_text;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid generator spec: ") + e.what());
  }
  GenSpec spec = genspec_from_json(j);
  if (seed_given) spec.seed = o.seed;
  emit(emit_matrix(generate(spec), output_format(o)), o);
  return kOk;
}

int cmd_verify_corpus(const Options& o) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_text(o.path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid manifest: ") + e.what());
  }
  const nlohmann::json specs = manifest.is_array() ? manifest : manifest.value("specs", nlohmann::json::array());
  nlohmann::json entries = nlohmann::json::array();
  Index failures = 0;
  for (const auto& s : specs) {
    const CorpusEntry e = run_corpus_entry(genspec_from_json(s), o.seed, classify_options(o));
    if (!e.passed) ++failures;
    entries.push_back(corpus_entry_json(e));
  }
  nlohmann::json out;
  out["entries"] = entries;
  out["count"] = specs.size();
  out["failures"] = failures;
  out["tolerances"] = {{"rel_tol", o.rel_tol}, {"peripheral_tol", o.peripheral_tol}, {"similarity_rel_tol", 1e-12}};
  emit(to_report_text(out), o);
  return failures == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign-symmetry, second compound and peripheral spectrum analysis"};
  app.require_subcommand(1);
  Options o;
  std::string spec_text;

  const auto add_path = [&](CLI::App* sub) { sub->add_option("path", o.path, "Matrix file (CSV or JSON, '-' for stdin)")->required(); };
  const auto add_tols = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", o.rel_tol, "Relative tolerance for matching and block radii")->check(CLI::PositiveNumber);
    sub->add_option("--peripheral-tol", o.peripheral_tol, "Relative tolerance for spectral-circle membership")->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "Maximum number of W candidates")->check(CLI::PositiveNumber);
  };
  const auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write to a file instead of stdout"); };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output matrix format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report as JSON");
  auto* compound = app.add_subcommand("compound", "Second compound matrix");
  auto* signsym = app.add_subcommand("signsym", "Canonical sign-symmetry certificate");
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius normal form");
  auto* wsets = app.add_subcommand("wsets", "W candidates and their transitivity");
  auto* classify_cmd = app.add_subcommand("classify", "Spectral classification report");
  auto* verify = app.add_subcommand("verify", "Check every predicted claim, one line each");
  auto* gen = app.add_subcommand("gen", "Generate a matrix from a JSON spec (or @file)");
  auto* corpus = app.add_subcommand("verify-corpus", "Run the property suite over a manifest of specs");

  for (auto* sub : {analyze, compound, signsym, frobenius, wsets, classify_cmd, verify}) {
    add_path(sub);
    add_output(sub);
  }
  for (auto* sub : {analyze, classify_cmd, verify}) add_tols(sub);
  add_format(compound);
  add_format(gen);
  signsym->add_flag("--all", o.all, "Also list every certificate");
  signsym->add_option("--cap", o.cap, "Maximum number of certificates listed")->check(CLI::PositiveNumber);
  wsets->add_option("--cap", o.cap, "Maximum number of W candidates")->check(CLI::PositiveNumber);
  gen->add_option("spec", spec_text, "Generator spec JSON, or @path")->required();
  auto* gen_seed = gen->add_option("--seed", o.seed, "Override the spec seed");
  add_output(gen);
  corpus->add_option("manifest", o.path, "JSON array of generator specs, or {\"specs\": [...]}")->required();
  corpus->add_option("--seed", o.seed, "Seed for the scrambling subsets");
  add_tols(corpus);
  add_output(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*compound) return cmd_compound(o);
    if (*signsym) return cmd_signsym(o);
    if (*frobenius) return cmd_frobenius(o);
    if (*wsets) return cmd_wsets(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*gen) return cmd_gen(o, spec_text, gen_seed->count() > 0);
    if (*corpus) return cmd_verify_corpus(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
