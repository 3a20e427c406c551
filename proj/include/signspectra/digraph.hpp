#pragma once

// Structure of the nonzero pattern: strong connectivity, the Frobenius normal
// form and the index of imprimitivity. Everything here is exact and
// combinatorial except the per-block spectral radii.

#include <optional>
#include <vector>

#include "signspectra/core.hpp"

namespace signspectra {

/// Edge i -> j iff a_ij != 0. Self-loops kept.
class Digraph {
 public:
  explicit Digraph(const Matrix& a);

  Index n() const { return succ_.size(); }
  const std::vector<Index>& successors(Index i) const { return succ_[i]; }
  bool has_edge(Index i, Index j) const;

  /// Strongly connected components, each sorted ascending, listed in the
  /// order Tarjan's algorithm closes them.
  std::vector<std::vector<Index>> strong_components() const;

 private:
  std::vector<std::vector<Index>> succ_;
};

bool is_irreducible(const Matrix& a);

/// A closed walk j_0 .. j_s through every index with nonzero a_{j_t j_{t+1}}
/// and a_{j_s j_0}; nullopt when the matrix is reducible.
std::optional<std::vector<Index>> irreducibility_path(const Matrix& a);

struct FrobeniusBlock {
  std::vector<Index> indices;  // original indices, ascending
  Matrix block;
  double rho = 0.0;
  bool degenerate = false;  // 1x1 zero block
};

struct FrobeniusForm {
  /// Position r of the reordered matrix holds original index perm(r).
  Permutation perm;
  std::vector<FrobeniusBlock> blocks;
  double rho = 0.0;  // max over blocks

  std::vector<Index> block_sizes() const;
  /// The reordered matrix; block lower triangular.
  Matrix reordered(const Matrix& a) const { return permute_similar(a, perm); }
};

/// Diagonal blocks are the strong components, ordered so that every nonzero
/// lies on or below the block diagonal; ties go to the block with the smaller
/// least index.
FrobeniusForm frobenius_form(const Matrix& a);

struct ImprimitivityIndex {
  Index h = 1;
  /// Cyclic classes; edges run from class r to class r+1 mod h. Only filled
  /// for h > 1.
  std::vector<std::vector<Index>> cyclic_classes;
};

/// gcd of cycle lengths of the pattern. Throws ReducibleInputError.
ImprimitivityIndex imprimitivity_index(const Matrix& a);

/// h == 1. Throws ReducibleInputError.
bool is_primitive(const Matrix& a);

}  // namespace signspectra
