#pragma once

// J-sign-symmetry: a matrix whose negative entries join exactly the index set
// J to its complement. Equivalently D A D^{-1} >= 0 for D = diag(+-1).
//
// Detection reduces to balance of a signed graph: strictly positive entries
// force their endpoints onto the same side of J, strictly negative entries
// onto opposite sides, and zeros impose nothing.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra {

struct JCertificate {
  std::vector<Index> j_set;  // sorted
  std::vector<int> d_signs;  // d_i = -1 iff i in J
  Matrix a_tilde;            // D A D^{-1}, entrywise nonnegative
};

/// Certificate for an arbitrary J. Does not check validity.
JCertificate make_certificate(const Matrix& a, std::span<const Index> j_set);

class SignConstraintGraph {
 public:
  explicit SignConstraintGraph(const Matrix& a);

  Index n() const { return side_.size(); }
  bool consistent() const { return consistent_; }
  Index component_count() const { return components_.size(); }

  /// Components ordered by smallest member; members ascending.
  const std::vector<std::vector<Index>>& components() const { return components_; }

  /// 0 or 1 relative to the smallest member of the node's component.
  /// Meaningful only when consistent.
  int side(Index i) const { return side_[i]; }

  /// Shortest odd-signed cycle seen while colouring; empty when consistent.
  const std::vector<Index>& odd_cycle() const { return odd_cycle_; }

  const std::vector<IndexPair>& same_side_edges() const { return same_; }
  const std::vector<IndexPair>& opposite_side_edges() const { return opposite_; }

  /// Number of valid J sets, or nullopt when it overflows 64 bits.
  std::optional<std::uint64_t> certificate_count() const;

 private:
  std::vector<IndexPair> same_;
  std::vector<IndexPair> opposite_;
  std::vector<std::vector<Index>> components_;
  std::vector<int> side_;
  std::vector<Index> odd_cycle_;
  bool consistent_ = true;
};

struct SignSymmetry {
  std::optional<JCertificate> certificate;  // canonical, when sign-symmetric
  std::vector<Index> odd_cycle;             // witness otherwise
  Index component_count = 0;

  bool sign_symmetric() const { return certificate.has_value(); }
};

/// Canonical certificate: in each component the side holding the smallest
/// index is outside J.
SignSymmetry detect(const Matrix& a);

inline constexpr Index kDefaultCertificateCap = Index{1} << 20;

/// All valid J sets in canonical order: bit c of the enumeration counter
/// flips component c (components ordered by smallest member).
std::vector<std::vector<Index>> enumerate_j_sets(const Matrix& a,
                                                 Index cap = kDefaultCertificateCap);

std::vector<JCertificate> enumerate_certificates(const Matrix& a,
                                                 Index cap = kDefaultCertificateCap);

/// True iff D A D^{-1} is nonnegative, equals cert.a_tilde exactly and the
/// signs agree with cert.j_set.
bool verify_certificate(const Matrix& a, const JCertificate& cert);

/// Certificate for A(alpha) with J' = J restricted to alpha, reindexed.
/// Throws NotSignSymmetricError when the restriction is not a valid certificate.
JCertificate principal_submatrix_certificate(const Matrix& a, std::span<const Index> alpha,
                                             const JCertificate& cert);

/// (1/n) * trace(A), a lower bound for the spectral radius of a
/// sign-symmetric matrix.
double trace_bound(const Matrix& a, const JCertificate& cert);

}  // namespace signspectra
