#pragma once

// Second compound matrix and its W-basis variants: the matrix of A ^ A in the
// basis {e_i ^ e_j : (i, j) in W \ diag}.

#include <span>
#include <vector>

#include "signspectra/core.hpp"
#include "signspectra/wsets.hpp"

namespace signspectra {

/// Largest base dimension accepted by the compound constructions.
inline constexpr Index kMaxCompoundBase = 180;

struct CompoundMatrix {
  Index base_n = 0;
  Matrix values;  // C(base_n, 2) square, lexicographic pair order

  Index m() const { return values.n(); }
};

struct WMatrix {
  Index base_n = 0;
  WSet w;
  std::vector<IndexPair> pair_order;  // W \ diag, lexicographic
  Matrix values;

  Index m() const { return values.n(); }
};

CompoundMatrix compound2(const Matrix& a);

WMatrix w_matrix(const Matrix& a, const WSet& w);

/// (x ^ y)(i, j) = x_i y_j - x_j y_i over w's pairs, in WMatrix pair order.
std::vector<double> exterior_product(std::span<const double> x, std::span<const double> y,
                                     const WSet& w);

struct EigenvalueProductCheck {
  bool matched = false;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::vector<Complex> products;       // lambda_i * lambda_j, i < j
  std::vector<Complex> w_eigenvalues;  // eigenvalues of the W-matrix
};

/// Default matching tolerance 1e-6 * max(1, rho(A)^2).
double default_product_tolerance(double rho);

/// Compares the pairwise products of eig(A) with eig(A_W) as multisets.
/// tol <= 0 selects default_product_tolerance.
EigenvalueProductCheck verify_eigenvalue_products(const Matrix& a, const WSet& w,
                                                  double tol = 0.0);

}  // namespace signspectra
