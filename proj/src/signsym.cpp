#include "signspectra/signsym.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace signspectra {

JCertificate make_certificate(const Matrix& a, std::span<const Index> j_set) {
  const Index n = a.n();
  JCertificate cert;
  cert.j_set.assign(j_set.begin(), j_set.end());
  std::sort(cert.j_set.begin(), cert.j_set.end());
  cert.j_set.erase(std::unique(cert.j_set.begin(), cert.j_set.end()), cert.j_set.end());
  cert.d_signs.assign(n, 1);
  for (Index i : cert.j_set) {
    if (i >= n) throw std::out_of_range("J entry out of range");
    cert.d_signs[i] = -1;
  }
  cert.a_tilde = Matrix(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      cert.a_tilde(i, j) = cert.d_signs[i] * a(i, j) * cert.d_signs[j] + 0.0;
  return cert;
}

SignConstraintGraph::SignConstraintGraph(const Matrix& a) {
  const Index n = a.n();
  side_.assign(n, -1);
  for (Index i = 0; i < n; ++i) {
    if (a(i, i) < 0.0) {
      consistent_ = false;
      odd_cycle_ = {i};
    }
    for (Index j = i + 1; j < n; ++j) {
      const double x = a(i, j);
      const double y = a(j, i);
      if (x > 0.0 || y > 0.0) same_.emplace_back(i, j);
      if (x < 0.0 || y < 0.0) opposite_.emplace_back(i, j);
    }
  }

  std::vector<Index> parent(n, 0);
  std::vector<Index> depth(n, 0);
  Index best = odd_cycle_.empty() ? std::numeric_limits<Index>::max() : 1;

  auto cycle_length = [&](Index u, Index v) {
    Index x = u, y = v, len = 1;
    while (depth[x] > depth[y]) x = parent[x], ++len;
    while (depth[y] > depth[x]) y = parent[y], ++len;
    while (x != y) x = parent[x], y = parent[y], len += 2;
    return len;
  };
  auto record_cycle = [&](Index u, Index v) {
    const Index len = cycle_length(u, v);
    if (len >= best) return;
    best = len;
    std::vector<Index> up, down;
    Index x = u, y = v;
    while (depth[x] > depth[y]) up.push_back(x), x = parent[x];
    while (depth[y] > depth[x]) down.push_back(y), y = parent[y];
    while (x != y) up.push_back(x), down.push_back(y), x = parent[x], y = parent[y];
    up.push_back(x);
    odd_cycle_.assign(up.begin(), up.end());
    odd_cycle_.insert(odd_cycle_.end(), down.rbegin(), down.rend());
  };

  std::deque<Index> queue;
  for (Index root = 0; root < n; ++root) {
    if (side_[root] >= 0) continue;
    side_[root] = 0;
    depth[root] = 0;
    parent[root] = root;
    std::vector<Index> members{root};
    queue.push_back(root);
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      for (Index v = 0; v < n; ++v) {
        if (v == u) continue;
        const double x = a(u, v);
        const double y = a(v, u);
        const bool pos = x > 0.0 || y > 0.0;
        const bool neg = x < 0.0 || y < 0.0;
        for (int parity = 0; parity < 2; ++parity) {
          if (parity == 0 ? !pos : !neg) continue;
          const int want = side_[u] ^ parity;
          if (side_[v] < 0) {
            side_[v] = want;
            parent[v] = u;
            depth[v] = depth[u] + 1;
            members.push_back(v);
            queue.push_back(v);
          } else if (side_[v] != want) {
            consistent_ = false;
            record_cycle(u, v);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

std::optional<std::uint64_t> SignConstraintGraph::certificate_count() const {
  if (!consistent_) return std::uint64_t{0};
  if (components_.size() >= 64) return std::nullopt;
  return std::uint64_t{1} << components_.size();
}

SignSymmetry detect(const Matrix& a) {
  SignConstraintGraph graph(a);
  SignSymmetry result;
  result.component_count = graph.component_count();
  if (!graph.consistent()) {
    result.odd_cycle = graph.odd_cycle();
    return result;
  }
  std::vector<Index> j_set;
  for (Index i = 0; i < a.n(); ++i) {
    if (graph.side(i) == 1) j_set.push_back(i);
  }
  result.certificate = make_certificate(a, j_set);
  // Zeros impose no constraint, so re-check the conditions on the result.
  if (!verify_certificate(a, *result.certificate)) {
    throw std::logic_error("sign constraint colouring produced an invalid certificate");
  }
  return result;
}

std::vector<std::vector<Index>> enumerate_j_sets(const Matrix& a, Index cap) {
  SignConstraintGraph graph(a);
  if (!graph.consistent()) {
    throw NotSignSymmetricError("matrix is not J-sign-symmetric", graph.odd_cycle());
  }
  const auto count = graph.certificate_count();
  if (!count || *count > cap) {
    throw TooManyCertificatesError("2^" + std::to_string(graph.component_count()) +
                                   " certificates exceed cap " + std::to_string(cap));
  }
  const auto& comps = graph.components();
  std::vector<Index> comp_of(a.n());
  for (Index c = 0; c < comps.size(); ++c)
    for (Index i : comps[c]) comp_of[i] = c;

  std::vector<std::vector<Index>> sets;
  sets.reserve(*count);
  for (std::uint64_t mask = 0; mask < *count; ++mask) {
    std::vector<Index> j_set;
    for (Index i = 0; i < a.n(); ++i) {
      const int flip = static_cast<int>((mask >> comp_of[i]) & 1U);
      if ((graph.side(i) ^ flip) == 1) j_set.push_back(i);
    }
    sets.push_back(std::move(j_set));
  }
  return sets;
}

std::vector<JCertificate> enumerate_certificates(const Matrix& a, Index cap) {
  std::vector<JCertificate> certs;
  for (const auto& j_set : enumerate_j_sets(a, cap)) certs.push_back(make_certificate(a, j_set));
  return certs;
}

bool verify_certificate(const Matrix& a, const JCertificate& cert) {
  const Index n = a.n();
  if (cert.d_signs.size() != n || cert.a_tilde.n() != n) {
    throw std::invalid_argument("certificate dimension does not match matrix");
  }
  std::vector<int> expected(n, 1);
  for (Index i : cert.j_set) {
    if (i >= n) throw std::invalid_argument("certificate J entry out of range");
    expected[i] = -1;
  }
  if (expected != cert.d_signs) return false;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double t = cert.d_signs[i] * a(i, j) * cert.d_signs[j];
      if (t < 0.0 || t != cert.a_tilde(i, j)) return false;
    }
  return true;
}

JCertificate principal_submatrix_certificate(const Matrix& a, std::span<const Index> alpha,
                                             const JCertificate& cert) {
  const Matrix sub = principal_submatrix(a, alpha);
  if (cert.d_signs.size() != a.n()) {
    throw std::invalid_argument("certificate dimension does not match matrix");
  }
  std::vector<Index> j_sub;
  for (Index p = 0; p < alpha.size(); ++p) {
    if (cert.d_signs[alpha[p]] == -1) j_sub.push_back(p);
  }
  JCertificate out = make_certificate(sub, j_sub);
  if (!verify_certificate(sub, out)) {
    const auto witness = detect(sub);
    throw NotSignSymmetricError("restricted certificate is not valid for the submatrix",
                                witness.odd_cycle);
  }
  return out;
}

double trace_bound(const Matrix& a, const JCertificate& cert) {
  (void)cert;
  return a.trace() / static_cast<double>(a.n());
}

}  // namespace signspectra
