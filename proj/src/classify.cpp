#include "signspectra/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "signspectra/exterior.hpp"

namespace signspectra {

namespace {

// Slack for "real" and "nonnegative" claims, relative to rho.
constexpr double kRealSlack = 1e-8;
// Peripheral eigenvalues closer than this (relative to rho) are not simple.
constexpr double kSimpleSeparation = 1e-4;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string num(Complex z) { return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i"; }

std::string one_based(const std::vector<Index>& v) {
  std::string s = "{";
  for (Index t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t] + 1);
  return s + "}";
}

void add(Classification& c, std::string claim, bool ok, std::string detail) {
  c.predictions.push_back({std::move(claim), ok, std::move(detail)});
}

// Index of the eigenvalue on the outer circle with the largest real part.
Index lambda1_index(const Spectrum& s, double tol) {
  Index best = 0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const Complex z = s.eigenvalues[i];
    if (std::abs(z) < s.rho * (1.0 - tol)) continue;
    if (std::abs(s.eigenvalues[best]) < s.rho * (1.0 - tol) || z.real() > s.eigenvalues[best].real()) {
      best = i;
    }
  }
  return best;
}

// Among the eigenvalues other than skip, the one of largest modulus; ties
// within tol * rho go to the largest real part.
std::optional<Index> next_index(const Spectrum& s, Index skip, double tol) {
  double top = -1.0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i)
    if (i != skip) top = std::max(top, std::abs(s.eigenvalues[i]));
  if (top < 0.0) return std::nullopt;
  std::optional<Index> best;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (i == skip || std::abs(s.eigenvalues[i]) < top - tol * s.rho) continue;
    if (!best || s.eigenvalues[i].real() > s.eigenvalues[*best].real()) best = i;
  }
  return best;
}

double min_distance_to_others(const Spectrum& s, Index i) {
  double d = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < s.eigenvalues.size(); ++j)
    if (j != i) d = std::min(d, std::abs(s.eigenvalues[i] - s.eigenvalues[j]));
  return d;
}

double min_pairwise_distance(const std::vector<Complex>& v) {
  double d = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < v.size(); ++i)
    for (Index j = i + 1; j < v.size(); ++j) d = std::min(d, std::abs(v[i] - v[j]));
  return d;
}

bool has_positive_principal_minor2(const Matrix& a) {
  for (Index i = 0; i < a.n(); ++i)
    for (Index j = i + 1; j < a.n(); ++j)
      if (minor2(a, i, j, i, j) > 0.0) return true;
  return false;
}

void predict_rho_simple_positive(Classification& c) {
  const Spectrum& s = c.spectrum;
  const Index i1 = lambda1_index(s, c.options.peripheral_tol);
  const Complex l1 = s.eigenvalues[i1];
  const double sep = min_distance_to_others(s, i1);
  const bool ok = std::abs(l1.imag()) <= kRealSlack * s.rho && l1.real() > 0.0 &&
                  std::abs(l1.real() - s.rho) <= c.options.rel_tol * s.rho &&
                  sep > kSimpleSeparation * s.rho;
  add(c, "lambda1 = rho(A) is a simple positive eigenvalue", ok,
      "lambda1 = " + num(l1) + ", rho = " + num(s.rho) + ", separation " + num(sep));
}

void predict_h_one(Classification& c) {
  add(c, "h(A) = 1", *c.h_a == 1 && c.peripheral.count == 1,
      "combinatorial h = " + std::to_string(*c.h_a) + ", peripheral count = " +
          std::to_string(c.peripheral.count));
}

void predict_theorem7(Classification& c) {
  const Spectrum& s = c.spectrum;
  const Index i1 = lambda1_index(s, c.options.peripheral_tol);
  const auto i2 = next_index(s, i1, c.options.peripheral_tol);
  const double slack = kRealSlack * std::max(1.0, s.rho);
  bool ok = std::abs(s.eigenvalues[i1].imag()) <= slack && s.eigenvalues[i1].real() >= -slack;
  std::string detail = "lambda1 = " + num(s.eigenvalues[i1]);
  if (i2) {
    const Complex l2 = s.eigenvalues[*i2];
    ok = ok && std::abs(l2.imag()) <= slack && l2.real() >= -slack;
    detail += ", lambda2 = " + num(l2);
  }
  add(c, "the two largest-modulus eigenvalues are nonnegative", ok, detail);
}

void predict_peripheral_roots(Classification& c, Index k) {
  const auto& g = c.peripheral;
  const double sep = min_pairwise_distance(g.values);
  add(c, "peripheral eigenvalues are simple", c.a_irreducible && sep > kSimpleSeparation * c.spectrum.rho,
      "minimum pairwise distance " + num(sep));
  const bool roots = g.count == k && g.roots_of && g.roots_of->k == k;
  add(c, "peripheral eigenvalues are the " + std::to_string(k) + "-th roots of rho^" + std::to_string(k),
      roots, "peripheral count " + std::to_string(g.count) + ", pattern deviation " + num(g.pattern_deviation));
}

void route_irreducible(Classification& c, const Matrix& a) {
  c.h_a = imprimitivity_index(a).h;
  predict_rho_simple_positive(c);

  if (c.compound_irreducible) {
    if (!c.exists_transitive) {
      throw TooManyCertificatesError("W candidate enumeration exceeded its cap; cannot route");
    }
    c.h_compound = imprimitivity_index(*c.compound).h;
    if (*c.exists_transitive) {
      c.theorem = Theorem::kT9_1;
      predict_h_one(c);
    } else {
      c.theorem = Theorem::kT9_2;
      add(c, "h(A) = 3", *c.h_a == 3, "combinatorial h(A) = " + std::to_string(*c.h_a));
      add(c, "h(A^A) = 3", *c.h_compound == 3,
          "combinatorial h(A^A) = " + std::to_string(*c.h_compound));
      add(c, "exactly 3 eigenvalues on the spectral circle", c.peripheral.count == 3,
          "peripheral count " + std::to_string(c.peripheral.count));
      predict_peripheral_roots(c, 3);
    }
  } else if (!a.has_zero_diagonal()) {
    c.theorem = Theorem::kT10;
    predict_h_one(c);
  } else {
    if (!c.exists_transitive) {
      throw TooManyCertificatesError("W candidate enumeration exceeded its cap; cannot route");
    }
    if (*c.exists_transitive) {
      c.theorem = Theorem::kT8_1;
      predict_h_one(c);
    } else {
      c.theorem = Theorem::kT8_2;
      const Index h = *c.h_a;
      add(c, "peripheral count k equals h(A) = " + std::to_string(h), c.peripheral.count == h,
          "peripheral count " + std::to_string(c.peripheral.count));
      add(c, "k = " + std::to_string(h) + " is odd", h % 2 == 1, "combinatorial h(A) = " + std::to_string(h));
      predict_peripheral_roots(c, h);
    }
  }

  const auto second = second_eigenvalue_claims(a, c);
  for (const auto& p : second.claims) c.predictions.push_back(p);
  if (c.exists_transitive.value_or(false)) predict_theorem7(c);
}

void route_reducible(Classification& c) {
  c.theorem = Theorem::kT11;
  const Spectrum& s = c.spectrum;
  const FrobeniusForm& form = *c.frobenius;
  const double rho = form.rho;

  std::vector<Complex> expected;
  for (const auto& b : form.blocks) {
    if (b.rho < rho * (1.0 - c.options.rel_tol)) continue;
    PeripheralBlockGroup g{b.indices, imprimitivity_index(b.block).h};
    const auto roots = roots_of_unity(g.k, rho);
    expected.insert(expected.end(), roots.begin(), roots.end());
    c.groups.push_back(std::move(g));
  }
  c.m = c.groups.size();

  Index near_rho = 0;
  for (const Complex& z : s.eigenvalues)
    if (std::abs(z - rho) <= c.options.rel_tol * rho) ++near_rho;
  add(c, "rho(A) is a positive eigenvalue", rho > 0.0 && near_rho >= 1,
      "rho = " + num(rho) + ", " + std::to_string(near_rho) + " computed eigenvalues within tolerance of rho");
  add(c, "rho(A) has multiplicity m = " + std::to_string(c.m), near_rho == c.m,
      std::to_string(near_rho) + " computed eigenvalues within tolerance of rho");
  for (const auto& g : c.groups) {
    add(c, "block " + one_based(g.indices) + ": k = " + std::to_string(g.k) + " is odd", g.k % 2 == 1,
        "imprimitivity index of the block");
  }
  const MultisetMatch match = match_multisets(c.peripheral.values, expected, c.options.rel_tol * rho);
  add(c, "peripheral spectrum is the union of " + std::to_string(c.m) + " root-of-unity groups",
      match.matched, "expected " + std::to_string(expected.size()) + " values, found " +
                         std::to_string(c.peripheral.count) + ", deviation " + num(match.max_deviation));
  if (c.exists_transitive.value_or(false)) predict_theorem7(c);
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kT8_1: return "T8.1";
    case Theorem::kT8_2: return "T8.2";
    case Theorem::kT9_1: return "T9.1";
    case Theorem::kT9_2: return "T9.2";
    case Theorem::kT10: return "T10";
    case Theorem::kT11: return "T11";
    case Theorem::kNone: return "NONE";
  }
  return "NONE";
}

bool Classification::verified() const {
  return std::all_of(predictions.begin(), predictions.end(),
                     [](const Prediction& p) { return p.verified; });
}

Classification classify(const Matrix& a, const ClassifyOptions& options) {
  Classification c;
  c.options = options;
  c.spectrum = eigenvalues(a);
  c.peripheral = peripheral_spectrum(c.spectrum, options.peripheral_tol);

  c.a_signsym = detect(a);
  if (!c.a_signsym.sign_symmetric()) {
    c.diagnostics.push_back("A is not J-sign-symmetric; odd-signed cycle " +
                            one_based(c.a_signsym.odd_cycle));
    return c;
  }
  if (a.n() < 2) {
    c.diagnostics.push_back("n = 1: the second compound matrix is empty");
    return c;
  }
  c.compound = compound2(a).values;
  c.compound_signsym = detect(*c.compound);
  if (!c.compound_signsym->sign_symmetric()) {
    c.diagnostics.push_back("the second compound matrix is not J-sign-symmetric; odd-signed cycle " +
                            one_based(c.compound_signsym->odd_cycle));
    return c;
  }

  c.a_irreducible = is_irreducible(a);
  const Matrix& comp = *c.compound;
  const bool compound_degenerate = comp.n() == 1 && comp(0, 0) == 0.0;
  c.compound_irreducible = is_irreducible(comp) && !compound_degenerate;
  if (compound_degenerate) {
    c.diagnostics.push_back("the second compound matrix is the 1x1 zero matrix; treated as reducible");
  }
  c.frobenius = frobenius_form(a);

  try {
    const auto a_sets = enumerate_j_sets(a, options.certificate_cap);
    const auto c_sets = enumerate_j_sets(comp, options.certificate_cap);
    c.a_certificate_count = a_sets.size();
    c.compound_certificate_count = c_sets.size();
    c.candidates = enumerate_w_candidates(a.n(), a_sets, c_sets, options.candidate_cap);
    c.exists_transitive = c.candidates->exists_transitive;
  } catch (const TooManyCertificatesError& e) {
    c.diagnostics.push_back(std::string("W candidates not enumerated: ") + e.what());
  }

  const auto& blocks = c.frobenius->blocks;
  if (std::all_of(blocks.begin(), blocks.end(), [](const FrobeniusBlock& b) { return b.degenerate; })) {
    c.diagnostics.push_back("rho(A) = 0: the pattern has no cycles; predictions are vacuous");
    return c;
  }

  if (c.a_certificate_count > 0 && blocks.size() < 64 &&
      c.a_certificate_count != (Index{1} << blocks.size())) {
    c.diagnostics.push_back("certificate count " + std::to_string(c.a_certificate_count) +
                            " differs from 2^l with l = " + std::to_string(blocks.size()) +
                            " Frobenius blocks");
  }

  if (c.a_irreducible) {
    route_irreducible(c, a);
  } else {
    route_reducible(c);
  }
  return c;
}

SecondEigenvalueReport second_eigenvalue_claims(const Matrix& a, const Classification& c) {
  SecondEigenvalueReport r;
  r.applicable = c.theorem == Theorem::kT8_1 || c.theorem == Theorem::kT9_1 || c.theorem == Theorem::kT10;
  if (!r.applicable) return r;
  const Spectrum& s = c.spectrum;
  const double tol = c.options.peripheral_tol;
  const Index i1 = lambda1_index(s, tol);
  const auto i2 = next_index(s, i1, tol);
  r.lambda1 = s.eigenvalues[i1];
  if (!i2) return r;  // n = 1 has no second eigenvalue
  r.lambda2 = s.eigenvalues[*i2];
  const Complex l2 = r.lambda2;
  const double slack = kRealSlack * s.rho;
  auto claim = [&](std::string text, bool ok) {
    r.claims.push_back({std::move(text), ok, "lambda1 = " + num(r.lambda1) + ", lambda2 = " + num(l2)});
  };

  claim("lambda2 is real", std::abs(l2.imag()) <= slack);
  claim("lambda2 >= 0", l2.real() >= -slack);
  claim("|lambda2| < lambda1", std::abs(l2) < s.rho * (1.0 - kRealSlack));

  if (c.theorem == Theorem::kT9_1) {
    claim("lambda2 > 0 and simple", l2.real() > slack && min_distance_to_others(s, *i2) > kSimpleSeparation * s.rho);
    const Index hc = c.h_compound.value_or(1);
    if (hc == 1) {
      double third = 0.0;
      for (Index i = 0; i < s.eigenvalues.size(); ++i)
        if (i != i1 && i != *i2) third = std::max(third, std::abs(s.eigenvalues[i]));
      r.claims.push_back({"h(A^A) = 1: |lambda3| < lambda2", third < std::abs(l2) * (1.0 - tol),
                          "|lambda3| = " + num(third) + ", lambda2 = " + num(l2)});
    } else {
      const PeripheralGroup g = circle_group(s, std::abs(l2), tol);
      r.claims.push_back({"h(A^A) = " + std::to_string(hc) + ": the lambda2 circle holds the " +
                              std::to_string(hc) + "-th roots of lambda2^" + std::to_string(hc),
                          g.count == hc && g.roots_of.has_value() &&
                              min_pairwise_distance(g.values) > kSimpleSeparation * s.rho,
                          "circle count " + std::to_string(g.count)});
    }
  }
  if (c.theorem == Theorem::kT10 && has_positive_principal_minor2(a)) {
    claim("positive principal 2x2 minor: lambda2 > 0", l2.real() > 0.0);
  }
  return r;
}

}  // namespace signspectra
