#include "signspectra/exterior.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "signspectra/spectrum.hpp"

namespace signspectra {

namespace {

void check_base(const Matrix& a) {
  if (a.n() < 2) throw std::invalid_argument("compound matrix needs n >= 2");
  if (a.n() > kMaxCompoundBase) {
    throw std::invalid_argument("compound matrix of a " + std::to_string(a.n()) +
                                "x" + std::to_string(a.n()) + " matrix exceeds the limit n <= " +
                                std::to_string(kMaxCompoundBase));
  }
}

Matrix minors_over(const Matrix& a, const std::vector<IndexPair>& order) {
  const Index m = order.size();
  Matrix out(m);
  detail::parallel_for(m, 64, [&](Index r) {
    const auto [i, j] = order[r];
    for (Index c = 0; c < m; ++c) {
      const auto [k, l] = order[c];
      out(r, c) = a(i, k) * a(j, l) - a(i, l) * a(j, k) + 0.0;
    }
  });
  return out;
}

}  // namespace

CompoundMatrix compound2(const Matrix& a) {
  check_base(a);
  return {a.n(), minors_over(a, PairIndexer(a.n()).pairs())};
}

WMatrix w_matrix(const Matrix& a, const WSet& w) {
  check_base(a);
  if (w.n() != a.n()) throw std::invalid_argument("W set dimension does not match matrix");
  WMatrix out;
  out.base_n = a.n();
  out.w = w;
  out.pair_order = w.off_diagonal_pairs();
  out.values = minors_over(a, out.pair_order);
  return out;
}

std::vector<double> exterior_product(std::span<const double> x, std::span<const double> y,
                                     const WSet& w) {
  if (x.size() != y.size() || x.size() != w.n()) {
    throw std::invalid_argument("exterior product length mismatch");
  }
  std::vector<double> out;
  for (auto [i, j] : w.off_diagonal_pairs()) out.push_back(x[i] * y[j] - x[j] * y[i] + 0.0);
  return out;
}

double default_product_tolerance(double rho) { return 1e-6 * std::max(1.0, rho * rho); }

EigenvalueProductCheck verify_eigenvalue_products(const Matrix& a, const WSet& w, double tol) {
  const Spectrum base = eigenvalues(a);
  const WMatrix aw = w_matrix(a, w);
  const Spectrum lifted = eigenvalues(aw.values);

  EigenvalueProductCheck check;
  check.tolerance = tol > 0.0 ? tol : default_product_tolerance(base.rho);
  const auto& ev = base.eigenvalues;
  for (Index i = 0; i < ev.size(); ++i)
    for (Index j = i + 1; j < ev.size(); ++j) check.products.push_back(ev[i] * ev[j]);
  check.w_eigenvalues = lifted.eigenvalues;
  const MultisetMatch match = match_multisets(check.products, check.w_eigenvalues, check.tolerance);
  check.matched = match.matched;
  check.max_deviation = match.max_deviation;
  return check;
}

}  // namespace signspectra
