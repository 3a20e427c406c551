#include "signspectra/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace signspectra {

namespace {

void check_dimension(Index n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (n > kMaxDimension) {
    throw std::invalid_argument("matrix dimension " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kMaxDimension));
  }
}

}  // namespace

Matrix::Matrix(Index n) : n_(n), data_(n * n, 0.0) { check_dimension(n); }

Matrix::Matrix(Index n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  check_dimension(n);
  if (data_.size() != n * n) {
    throw std::invalid_argument("expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(data_.size()));
  }
  check_finite();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  check_dimension(n_);
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("matrix is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  check_finite();
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const Index n = rows.size();
  check_dimension(n);
  std::vector<double> data;
  data.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(n, std::move(data));
}

Matrix Matrix::identity(Index n) {
  Matrix m(n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (Index i = 0; i < values.size(); ++i) m(i, i) = values[i];
  m.check_finite();
  return m;
}

double Matrix::at(Index i, Index j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

double Matrix::trace() const {
  double t = 0.0;
  for (Index i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v >= 0.0; });
}

bool Matrix::has_zero_diagonal() const {
  for (Index i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(double c) const {
  Matrix s = *this;
  for (double& v : s.data_) v *= c;
  s.check_finite();
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in product");
  const Index n = a.n_;
  Matrix c(n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (Index j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  c.check_finite();
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in sum");
  Matrix c = a;
  for (Index i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  c.check_finite();
  return c;
}

void Matrix::check_finite() const {
  for (Index k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k])) {
      throw std::invalid_argument("non-finite entry at (" + std::to_string(k / n_ + 1) + "," +
                                  std::to_string(k % n_ + 1) + ")");
    }
  }
}

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Index v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(Index n) {
  std::vector<Index> images(n);
  for (Index i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (Index i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Matrix Permutation::to_matrix() const {
  Matrix p(n());
  for (Index i = 0; i < n(); ++i) p(i, images_[i]) = 1.0;
  return p;
}

PairIndexer::PairIndexer(Index n) : n_(n), row_start_(n, 0) {
  Index start = 0;
  for (Index i = 0; i < n; ++i) {
    row_start_[i] = start;
    start += n - i - 1;
  }
}

Index PairIndexer::index(Index i, Index j) const {
  if (i >= j || j >= n_) {
    throw std::out_of_range("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not an increasing pair in 1.." + std::to_string(n_));
  }
  return row_start_[i] + (j - i - 1);
}

IndexPair PairIndexer::unindex(Index alpha) const {
  if (alpha >= size()) {
    throw std::out_of_range("pair index " + std::to_string(alpha + 1) + " outside 1.." +
                            std::to_string(size()));
  }
  // last row whose start is <= alpha
  auto it = std::upper_bound(row_start_.begin(), row_start_.end() - 1, alpha);
  const Index i = static_cast<Index>(it - row_start_.begin()) - 1;
  return {i, i + 1 + (alpha - row_start_[i])};
}

std::vector<IndexPair> PairIndexer::pairs() const {
  std::vector<IndexPair> out;
  out.reserve(size());
  for (Index i = 0; i < n_; ++i)
    for (Index j = i + 1; j < n_; ++j) out.emplace_back(i, j);
  return out;
}

Index pair_index(Index i, Index j, Index n) { return PairIndexer(n).index(i, j); }

IndexPair pair_unindex(Index alpha, Index n) { return PairIndexer(n).unindex(alpha); }

double oriented_minor2(const Matrix& a, Index i, Index j, Index k, Index l) {
  const Index n = a.n();
  if (i >= n || j >= n || k >= n || l >= n) throw std::out_of_range("minor index out of range");
  if (i == j || k == l) throw std::invalid_argument("minor rows and columns must be distinct");
  return a(i, k) * a(j, l) - a(i, l) * a(j, k);
}

double minor2(const Matrix& a, Index i, Index j, Index k, Index l) {
  if (i >= j || k >= l) throw std::invalid_argument("minor2 requires i < j and k < l");
  return oriented_minor2(a, i, j, k, l);
}

Matrix principal_submatrix(const Matrix& a, std::span<const Index> alpha) {
  if (alpha.empty()) throw std::invalid_argument("index set must be nonempty");
  for (Index p = 0; p < alpha.size(); ++p) {
    if (alpha[p] >= a.n()) throw std::out_of_range("index set entry out of range");
    if (p > 0 && alpha[p] <= alpha[p - 1]) {
      throw std::invalid_argument("index set must be strictly increasing");
    }
  }
  Matrix s(alpha.size());
  for (Index r = 0; r < alpha.size(); ++r)
    for (Index c = 0; c < alpha.size(); ++c) s(r, c) = a(alpha[r], alpha[c]);
  return s;
}

Matrix permute_similar(const Matrix& a, const Permutation& p) {
  if (p.n() != a.n()) throw std::invalid_argument("permutation size mismatch");
  Matrix s(a.n());
  for (Index r = 0; r < a.n(); ++r)
    for (Index c = 0; c < a.n(); ++c) s(r, c) = a(p(r), p(c));
  return s;
}

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIGNSPECTRA_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

}  // namespace signspectra
