#pragma once

// Foundational value types shared by every analysis module.
//
// Indices are 0-based in the C++ API. Reports, CLI output and matrix files
// use 1-based indices; the conversion happens only at those boundaries.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signspectra {

using Complex = std::complex<double>;
using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// Largest dimension accepted by Matrix.
inline constexpr Index kMaxDimension = 3000;

/// No subset J satisfies the sign conditions; carries an odd-signed cycle.
class NotSignSymmetricError : public std::runtime_error {
 public:
  NotSignSymmetricError(const std::string& what, std::vector<Index> cycle = {})
      : std::runtime_error(what), odd_cycle(std::move(cycle)) {}
  std::vector<Index> odd_cycle;
};

class TooManyCertificatesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReducibleInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real square matrix, row-major. Entries are always finite.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(Index n);
  Matrix(Index n, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(Index n);
  static Matrix diagonal(std::span<const double> values);

  Index n() const { return n_; }
  bool empty() const { return n_ == 0; }

  double operator()(Index i, Index j) const { return data_[i * n_ + j]; }
  double& operator()(Index i, Index j) { return data_[i * n_ + j]; }
  double at(Index i, Index j) const;

  std::span<const double> row(Index i) const { return {data_.data() + i * n_, n_}; }
  const std::vector<double>& data() const { return data_; }

  double trace() const;
  bool is_nonnegative() const;
  bool has_zero_diagonal() const;

  Matrix transposed() const;
  Matrix scaled(double c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void check_finite() const;

  Index n_ = 0;
  std::vector<double> data_;
};

/// Bijection on {0..n-1}; images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> images);
  static Permutation identity(Index n);

  Index n() const { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  const std::vector<Index>& images() const { return images_; }

  Permutation inverse() const;

  /// Matrix P with P(i, images[i]) = 1, so (P x)_i = x_{images[i]}.
  Matrix to_matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

/// C(n,2).
constexpr Index choose2(Index n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Lexicographic enumeration of the pairs (i, j), i < j, of {0..n-1}.
class PairIndexer {
 public:
  explicit PairIndexer(Index n);

  Index n() const { return n_; }
  Index size() const { return choose2(n_); }

  Index index(Index i, Index j) const;
  IndexPair unindex(Index alpha) const;
  /// All pairs in enumeration order.
  std::vector<IndexPair> pairs() const;

 private:
  Index n_;
  std::vector<Index> row_start_;  // index of (i, i+1)
};

Index pair_index(Index i, Index j, Index n);
IndexPair pair_unindex(Index alpha, Index n);

/// a_ik * a_jl - a_il * a_jk for rows i < j and columns k < l.
double minor2(const Matrix& a, Index i, Index j, Index k, Index l);

/// Same determinant with rows and columns taken in the given orientation;
/// only distinctness is required.
double oriented_minor2(const Matrix& a, Index i, Index j, Index k, Index l);

/// A(alpha): rows and columns restricted to the sorted, duplicate-free alpha.
Matrix principal_submatrix(const Matrix& a, std::span<const Index> alpha);

/// P A P^T for P = p.to_matrix(): entry (r, c) is a(p(r), p(c)).
Matrix permute_similar(const Matrix& a, const Permutation& p);

/// Worker count for internal parallel loops; honours SIGNSPECTRA_THREADS.
unsigned worker_threads();

}  // namespace signspectra
