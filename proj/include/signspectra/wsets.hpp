#pragma once

// W sets: relations on {0..n-1} that hold exactly one orientation of every
// off-diagonal pair plus the whole diagonal. They select a basis of the
// exterior square; the transitive ones are total orders.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra {

class WSet {
 public:
  WSet() = default;

  /// Validates both conditions; throws std::invalid_argument naming the
  /// offending pair otherwise. membership is row-major n*n.
  WSet(Index n, std::vector<char> membership);

  /// Diagonal plus the given off-diagonal pairs.
  static WSet from_pairs(Index n, std::span<const IndexPair> off_diagonal);

  Index n() const { return n_; }
  bool contains(Index i, Index j) const { return member_[i * n_ + j] != 0; }

  /// W minus the diagonal, sorted lexicographically as ordered pairs.
  std::vector<IndexPair> off_diagonal_pairs() const;

  /// The set with every pair reversed.
  WSet mirrored() const;

  const std::vector<char>& membership() const { return member_; }

  friend bool operator==(const WSet&, const WSet&) = default;
  friend auto operator<=>(const WSet&, const WSet&) = default;

 private:
  Index n_ = 0;
  std::vector<char> member_;
};

/// M = {(i, j) : i <= j}.
WSet canonical_m(Index n);

/// Membership mask over {0..size-1} from a sorted or unsorted index list.
std::vector<char> index_mask(std::span<const Index> members, Index size);

/// The four-case construction from a certificate set J of A and a
/// certificate set Jt (over lexicographic pair indices) of the compound.
WSet build_w_hat(std::span<const Index> j_set, std::span<const Index> jt_set, Index n);

struct TransitivityResult {
  bool transitive = false;
  /// First (i, j, k) in lexicographic order with (i,j), (j,k) in W but not (i,k).
  std::optional<std::array<Index, 3>> witness;
  /// When transitive: the rank of each index, W = {(i,j) : order(i) <= order(j)}.
  std::optional<Permutation> order;
};

TransitivityResult is_transitive(const WSet& w);

struct WCandidate {
  WSet w;
  /// Every (J, Jt) pair that builds this set.
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> generators;
  TransitivityResult transitivity;
};

struct WCandidateSet {
  std::vector<WCandidate> candidates;  // unique sets, in order of first generation
  Index pair_count = 0;                // number of (J, Jt) combinations scanned
  Index a_certificate_count = 0;
  Index compound_certificate_count = 0;
  bool exists_transitive = false;
};

inline constexpr Index kDefaultCandidateCap = Index{1} << 16;

/// Candidates over all certificate choices for A and its compound. Throws
/// NotSignSymmetricError or TooManyCertificatesError.
WCandidateSet enumerate_w_candidates(const Matrix& a, Index cap = kDefaultCandidateCap);

/// Same, from the certificate sets already enumerated.
WCandidateSet enumerate_w_candidates(Index n, std::span<const std::vector<Index>> a_sets,
                                     std::span<const std::vector<Index>> compound_sets,
                                     Index cap = kDefaultCandidateCap);

}  // namespace signspectra
