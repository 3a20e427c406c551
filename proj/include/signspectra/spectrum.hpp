#pragma once

// Numeric eigenvalues and the spectral-circle utilities built on them.

#include <optional>
#include <span>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra {

struct Spectrum {
  /// Canonical order: modulus descending, then argument ascending in [0, 2pi).
  std::vector<Complex> eigenvalues;
  double rho = 0.0;
  double backward_error_bound = 0.0;
};

/// Dense nonsymmetric eigensolve. Throws ConvergenceError.
Spectrum eigenvalues(const Matrix& a);

/// Sorts into the canonical order. Moduli equal to 1e-12 relative tie and
/// fall through to the argument.
void canonical_sort(std::vector<Complex>& values);

/// Argument mapped to [0, 2pi).
double argument(Complex z);

struct MultisetMatch {
  bool matched = false;
  double max_deviation = 0.0;  // over the chosen pairing; infinity on size mismatch
};

/// Greedy nearest-neighbour pairing: repeatedly pairs the closest remaining
/// (a, b) values. matched iff sizes agree and every paired distance <= tol.
MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol);

/// Points r * exp(2 pi i m / k), m = 0..k-1.
std::vector<Complex> roots_of_unity(Index k, double r);

struct RootsOf {
  Index k = 0;
  double rho_power = 0.0;  // r^k
};

struct PeripheralGroup {
  Index count = 0;
  double modulus = 0.0;
  std::vector<Complex> values;
  std::optional<RootsOf> roots_of;  // set when the values are the k-th roots of r^k
  bool degenerate = false;          // rho == 0
  double pattern_deviation = 0.0;
};

inline constexpr double kDefaultPeripheralTol = 1e-6;

/// Eigenvalues with |lambda| >= rho (1 - rel_tol), plus the roots-of-unity
/// pattern test at absolute tolerance rel_tol * rho.
PeripheralGroup peripheral_spectrum(const Spectrum& s, double rel_tol = kDefaultPeripheralTol);

/// Eigenvalues with | |lambda| - modulus | <= rel_tol * modulus, same pattern test.
PeripheralGroup circle_group(const Spectrum& s, double modulus, double rel_tol = kDefaultPeripheralTol);

}  // namespace signspectra
