#include "signspectra/wsets.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "signspectra/exterior.hpp"
#include "signspectra/signsym.hpp"

namespace signspectra {

WSet::WSet(Index n, std::vector<char> membership) : n_(n), member_(std::move(membership)) {
  if (n == 0) throw std::invalid_argument("W set dimension must be positive");
  if (member_.size() != n * n) throw std::invalid_argument("W membership grid is not n x n");
  for (char& c : member_) c = c ? 1 : 0;
  for (Index i = 0; i < n; ++i) {
    if (!contains(i, i)) {
      throw std::invalid_argument("W set misses diagonal pair (" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 1) + ")");
    }
    for (Index j = i + 1; j < n; ++j) {
      const bool forward = contains(i, j);
      const bool backward = contains(j, i);
      if (forward == backward) {
        throw std::invalid_argument(std::string("W set holds ") + (forward ? "both" : "neither") +
                                    " orientations of pair (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
}

WSet WSet::from_pairs(Index n, std::span<const IndexPair> off_diagonal) {
  std::vector<char> member(n * n, 0);
  for (Index i = 0; i < n; ++i) member[i * n + i] = 1;
  for (auto [i, j] : off_diagonal) {
    if (i >= n || j >= n) throw std::invalid_argument("W pair out of range");
    if (i == j) continue;
    member[i * n + j] = 1;
  }
  return WSet(n, std::move(member));
}

std::vector<IndexPair> WSet::off_diagonal_pairs() const {
  std::vector<IndexPair> out;
  out.reserve(choose2(n_));
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j)
      if (i != j && contains(i, j)) out.emplace_back(i, j);
  return out;
}

WSet WSet::mirrored() const {
  std::vector<char> m(n_ * n_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j) m[j * n_ + i] = member_[i * n_ + j];
  return WSet(n_, std::move(m));
}

WSet canonical_m(Index n) {
  std::vector<char> m(n * n, 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) m[i * n + j] = 1;
  return WSet(n, std::move(m));
}

std::vector<char> index_mask(std::span<const Index> members, Index size) {
  std::vector<char> mask(size, 0);
  for (Index i : members) {
    if (i >= size) throw std::out_of_range("index " + std::to_string(i + 1) + " outside 1.." +
                                           std::to_string(size));
    mask[i] = 1;
  }
  return mask;
}

WSet build_w_hat(std::span<const Index> j_set, std::span<const Index> jt_set, Index n) {
  const PairIndexer pairs(n);
  const auto in_j = index_mask(j_set, n);
  const auto in_jt = index_mask(jt_set, pairs.size());
  std::vector<char> m(n * n, 0);
  for (Index i = 0; i < n; ++i) m[i * n + i] = 1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool same_side = in_j[i] == in_j[j];
      const bool alpha_in = in_jt[pairs.index(i, j)] != 0;
      // (i,j), i<j: case (a) same side and alpha in Jt, case (b) opposite and alpha not in Jt.
      const bool forward = same_side ? alpha_in : !alpha_in;
      // (j,i): case (c) same side and alpha not in Jt, case (d) opposite and alpha in Jt.
      const bool backward = same_side ? !alpha_in : alpha_in;
      if (forward == backward) throw std::logic_error("four-case rule is not complementary");
      m[i * n + j] = forward;
      m[j * n + i] = backward;
    }
  }
  return WSet(n, std::move(m));
}

TransitivityResult is_transitive(const WSet& w) {
  const Index n = w.n();
  TransitivityResult result;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (!w.contains(i, j)) continue;
      for (Index k = 0; k < n; ++k) {
        if (w.contains(j, k) && !w.contains(i, k)) {
          result.witness = std::array<Index, 3>{i, j, k};
          return result;
        }
      }
    }
  result.transitive = true;
  // A total order: rank of i is the number of strict predecessors.
  std::vector<Index> rank(n, 0);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (k != i && w.contains(k, i)) ++rank[i];
  result.order = Permutation(std::move(rank));
  return result;
}

WCandidateSet enumerate_w_candidates(Index n, std::span<const std::vector<Index>> a_sets,
                                     std::span<const std::vector<Index>> compound_sets,
                                     Index cap) {
  WCandidateSet out;
  out.a_certificate_count = a_sets.size();
  out.compound_certificate_count = compound_sets.size();
  if (!a_sets.empty() && compound_sets.size() > cap / a_sets.size()) {
    throw TooManyCertificatesError(std::to_string(a_sets.size()) + " x " +
                                   std::to_string(compound_sets.size()) +
                                   " W candidates exceed cap " + std::to_string(cap));
  }
  std::map<std::vector<char>, Index> seen;
  for (const auto& j : a_sets) {
    for (const auto& jt : compound_sets) {
      ++out.pair_count;
      WSet w = build_w_hat(j, jt, n);
      auto [it, inserted] = seen.try_emplace(w.membership(), out.candidates.size());
      if (inserted) {
        WCandidate cand;
        cand.transitivity = is_transitive(w);
        cand.w = std::move(w);
        out.exists_transitive = out.exists_transitive || cand.transitivity.transitive;
        out.candidates.push_back(std::move(cand));
      }
      out.candidates[it->second].generators.emplace_back(j, jt);
    }
  }
  return out;
}

WCandidateSet enumerate_w_candidates(const Matrix& a, Index cap) {
  const auto a_sets = enumerate_j_sets(a, cap);
  const auto compound = compound2(a);
  const auto c_sets = enumerate_j_sets(compound.values, cap);
  return enumerate_w_candidates(a.n(), a_sets, c_sets, cap);
}

}  // namespace signspectra
