#pragma once

// Seeded generators of structured test matrices. Identical specs give
// bit-identical matrices: the engine is std::mt19937_64 (fully specified by
// the standard) and every conversion to a real number is done here rather
// than through the implementation-defined <random> distributions.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound), unbiased.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (Index i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { kNonnegIrreducible, kCyclicH, kTp2, kScrambled, kReducibleBlocks };

struct GenSpec {
  GenKind kind = GenKind::kNonnegIrreducible;
  std::uint64_t seed = 0;
  Index n = 0;
  Index h = 1;             // cyclic_h
  double density = 0.0;    // nonneg_irreducible: off-diagonal fill
  double magnitude = 1.0;  // entry scale
  std::optional<std::vector<Index>> j_set;  // scrambled; random subset when absent
  std::vector<GenSpec> children;            // scrambled: the base; reducible_blocks: the blocks
  std::optional<double> rho;                // rescale the result to this spectral radius
  double coupling = 0.0;                    // reducible_blocks: fill below the block diagonal
  bool relabel = false;                     // reducible_blocks: random symmetric permutation

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

Matrix generate(const GenSpec& spec);

/// Planted Hamiltonian cycle plus off-diagonal fill at the given density.
Matrix nonneg_irreducible(Index n, double density, double magnitude, std::uint64_t seed);

/// Class r maps to class r+1 mod h through a positive block whose 2x2 minors
/// are positive. Blocks have rank floor(n/h) so the zero eigenvalue, when
/// present, is semisimple.
Matrix cyclic_h(Index n, Index h, std::uint64_t seed, double magnitude = 1.0);

/// Positive matrix with positive second compound, built from positive
/// bidiagonal factors. Seed 0 gives the symmetric Pascal matrix C(i+j, i).
Matrix tp2(Index n, std::uint64_t seed, double magnitude = 1.0);

/// D B D with d_i = -1 iff i in J.
Matrix scrambled(const Matrix& base, std::span<const Index> j_set);

/// Random subset of {0..n-1}, each index with probability 1/2.
std::vector<Index> random_subset(Index n, std::uint64_t seed);

/// Block lower triangular composition of the given blocks.
Matrix reducible_blocks(std::span<const Matrix> blocks, double coupling, bool relabel,
                        std::uint64_t seed, double magnitude = 1.0);

/// c * a with rho(c * a) = target; a itself when rho(a) = 0.
Matrix rescale_to_rho(const Matrix& a, double target);

}  // namespace signspectra
