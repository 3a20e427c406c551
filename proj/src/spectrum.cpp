#include "signspectra/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

namespace signspectra {

double argument(Complex z) {
  double t = std::arg(z);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t >= 2.0 * std::numbers::pi) t = 0.0;
  return t;
}

void canonical_sort(std::vector<Complex>& values) {
  double scale = 0.0;
  for (const Complex& z : values) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) scale = 1.0;
  struct Keyed {
    double modulus_key;
    double arg;
    Complex z;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(values.size());
  for (const Complex& z : values) {
    const double key = std::round(std::abs(z) / scale * 1e12);
    // Imaginary parts at rounding level count as real so that rho sorts first.
    const double arg = std::abs(z.imag()) <= 1e-13 * scale ? (z.real() < 0.0 ? std::numbers::pi : 0.0)
                                                          : argument(z);
    keyed.push_back({key, arg, z});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(b.modulus_key, a.arg) < std::tie(a.modulus_key, b.arg);
  });
  for (Index i = 0; i < values.size(); ++i) values[i] = keyed[i].z;
}

Spectrum eigenvalues(const Matrix& a) {
  const Index n = a.n();
  if (n == 0) throw std::invalid_argument("eigenvalues of an empty matrix");
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = a(i, j);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalue iteration did not converge for a " + std::to_string(n) +
                           "x" + std::to_string(n) + " matrix");
  }
  Spectrum s;
  s.eigenvalues.reserve(n);
  for (Index i = 0; i < n; ++i) s.eigenvalues.push_back(solver.eigenvalues()(i));
  canonical_sort(s.eigenvalues);
  for (const Complex& z : s.eigenvalues) s.rho = std::max(s.rho, std::abs(z));
  s.backward_error_bound =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * m.norm();
  return s;
}

MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  MultisetMatch result;
  if (a.size() != b.size()) {
    result.max_deviation = std::numeric_limits<double>::infinity();
    return result;
  }
  struct Candidate {
    double dist;
    Index i;
    Index j;
  };
  std::vector<Candidate> all;
  all.reserve(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j) all.push_back({std::abs(a[i] - b[j]), i, j});
  std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.dist, x.i, x.j) < std::tie(y.dist, y.i, y.j);
  });
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  Index paired = 0;
  for (const Candidate& c : all) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = 1;
    result.max_deviation = std::max(result.max_deviation, c.dist);
    if (++paired == a.size()) break;
  }
  result.matched = result.max_deviation <= tol;
  return result;
}

std::vector<Complex> roots_of_unity(Index k, double r) {
  std::vector<Complex> out;
  out.reserve(k);
  for (Index m = 0; m < k; ++m) {
    out.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                    static_cast<double>(k)));
  }
  return out;
}

namespace {

void fit_roots_pattern(PeripheralGroup& g, double rel_tol) {
  if (g.count == 0 || g.modulus == 0.0) return;
  const auto pattern = roots_of_unity(g.count, g.modulus);
  const MultisetMatch m = match_multisets(g.values, pattern, rel_tol * g.modulus);
  g.pattern_deviation = m.max_deviation;
  if (m.matched) {
    g.roots_of = RootsOf{g.count, std::pow(g.modulus, static_cast<double>(g.count))};
  }
}

}  // namespace

PeripheralGroup peripheral_spectrum(const Spectrum& s, double rel_tol) {
  PeripheralGroup g;
  g.modulus = s.rho;
  if (s.rho == 0.0) {
    g.degenerate = true;
    return g;
  }
  for (const Complex& z : s.eigenvalues) {
    if (std::abs(z) >= s.rho * (1.0 - rel_tol)) g.values.push_back(z);
  }
  g.count = g.values.size();
  fit_roots_pattern(g, rel_tol);
  return g;
}

PeripheralGroup circle_group(const Spectrum& s, double modulus, double rel_tol) {
  PeripheralGroup g;
  g.modulus = modulus;
  if (modulus == 0.0) {
    g.degenerate = true;
    return g;
  }
  for (const Complex& z : s.eigenvalues) {
    if (std::abs(std::abs(z) - modulus) <= rel_tol * modulus) g.values.push_back(z);
  }
  g.count = g.values.size();
  fit_roots_pattern(g, rel_tol);
  return g;
}

}  // namespace signspectra
