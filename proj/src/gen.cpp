#include "signspectra/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "signspectra/exterior.hpp"
#include "signspectra/spectrum.hpp"

namespace signspectra {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

using Grid = std::vector<std::vector<double>>;

// Strictly totally positive kernel exp(2 x y) with diagonal scaling.
Grid tp_kernel(Index rows, Index cols, Rng& rng) {
  std::vector<double> x(rows), y(cols), r(rows), s(cols);
  for (double& v : x) v = rng.uniform();
  for (double& v : y) v = rng.uniform();
  for (double& v : r) v = rng.uniform(0.5, 2.0);
  for (double& v : s) v = rng.uniform(0.5, 2.0);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  Grid g(rows, std::vector<double>(cols));
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) g[i][k] = std::exp(2.0 * x[i] * y[k]) * r[i] * s[k];
  return g;
}

Grid multiply(const Grid& a, const Grid& b) {
  const Index rows = a.size(), inner = b.size(), cols = b.front().size();
  Grid c(rows, std::vector<double>(cols, 0.0));
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < inner; ++k)
      for (Index j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool strictly_tp2(const Matrix& a) {
  if (!std::all_of(a.data().begin(), a.data().end(), [](double v) { return v > 0.0; })) return false;
  if (a.n() < 2) return true;
  const Matrix c = compound2(a).values;
  return std::all_of(c.data().begin(), c.data().end(), [](double v) { return v > 0.0; });
}

}  // namespace

Matrix nonneg_irreducible(Index n, double density, double magnitude, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
  Rng rng(seed);
  Matrix a(n);
  if (n == 1) {
    a(0, 0) = magnitude * rng.uniform(0.5, 1.5);
    return a;
  }
  std::vector<Index> cycle(n);
  for (Index i = 0; i < n; ++i) cycle[i] = i;
  rng.shuffle(cycle);
  for (Index t = 0; t < n; ++t) a(cycle[t], cycle[(t + 1) % n]) = magnitude * rng.uniform(0.5, 1.5);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j || a(i, j) != 0.0) continue;
      if (rng.bernoulli(density)) a(i, j) = magnitude * rng.uniform(0.1, 1.0);
    }
  return a;
}

Matrix cyclic_h(Index n, Index h, std::uint64_t seed, double magnitude) {
  if (h == 0 || h > n) {
    throw std::invalid_argument("cyclic_h needs 1 <= h <= n (h = " + std::to_string(h) +
                                ", n = " + std::to_string(n) + ")");
  }
  Rng rng(seed);
  const Index q = n / h;
  std::vector<Index> size(h, q), offset(h + 1, 0);
  for (Index r = 0; r < n % h; ++r) ++size[r];
  for (Index r = 0; r < h; ++r) offset[r + 1] = offset[r] + size[r];

  Matrix a(n);
  for (Index r = 0; r < h; ++r) {
    const Index s = (r + 1) % h;
    const Grid block = multiply(tp_kernel(size[r], q, rng), tp_kernel(q, size[s], rng));
    for (Index i = 0; i < size[r]; ++i)
      for (Index k = 0; k < size[s]; ++k) a(offset[r] + i, offset[s] + k) = magnitude * block[i][k];
  }
  return a;
}

Matrix tp2(Index n, std::uint64_t seed, double magnitude) {
  if (n < 2) throw std::invalid_argument("tp2 needs n >= 2");
  if (seed == 0) {
    Matrix p(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        p(i, j) = i == 0 || j == 0 ? 1.0 : p(i - 1, j) + p(i, j - 1);
    return p.scaled(magnitude);
  }
  Rng rng(seed);
  constexpr int kRetries = 16;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Matrix a = Matrix::identity(n);
    // n-1 lower bidiagonal factors, a positive diagonal, n-1 upper factors.
    for (Index f = 0; f + 1 < n; ++f) {
      Matrix l = Matrix::identity(n);
      for (Index i = 1; i < n; ++i) l(i, i - 1) = rng.uniform(0.2, 1.0);
      a = a * l;
    }
    Matrix d(n);
    for (Index i = 0; i < n; ++i) d(i, i) = rng.uniform(0.5, 1.5);
    a = a * d;
    for (Index f = 0; f + 1 < n; ++f) {
      Matrix u = Matrix::identity(n);
      for (Index i = 1; i < n; ++i) u(i - 1, i) = rng.uniform(0.2, 1.0);
      a = a * u;
    }
    if (strictly_tp2(a)) return a.scaled(magnitude);
  }
  throw std::runtime_error("tp2: no strictly TP2 matrix after " + std::to_string(kRetries) + " attempts");
}

Matrix scrambled(const Matrix& base, std::span<const Index> j_set) {
  std::vector<double> d(base.n(), 1.0);
  for (Index i : j_set) {
    if (i >= base.n()) throw std::out_of_range("scrambling index out of range");
    d[i] = -1.0;
  }
  Matrix out(base.n());
  for (Index i = 0; i < base.n(); ++i)
    for (Index j = 0; j < base.n(); ++j) out(i, j) = d[i] * base(i, j) * d[j] + 0.0;
  return out;
}

std::vector<Index> random_subset(Index n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (rng.bernoulli(0.5)) out.push_back(i);
  return out;
}

Matrix reducible_blocks(std::span<const Matrix> blocks, double coupling, bool relabel,
                        std::uint64_t seed, double magnitude) {
  if (blocks.empty()) throw std::invalid_argument("reducible_blocks needs at least one block");
  Index n = 0;
  for (const auto& b : blocks) n += b.n();
  Rng rng(seed);
  Matrix a(n);
  std::vector<Index> block_of(n);
  Index off = 0;
  for (Index b = 0; b < blocks.size(); ++b) {
    for (Index i = 0; i < blocks[b].n(); ++i) {
      block_of[off + i] = b;
      for (Index j = 0; j < blocks[b].n(); ++j) a(off + i, off + j) = blocks[b](i, j);
    }
    off += blocks[b].n();
  }
  if (coupling > 0.0) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (block_of[j] < block_of[i] && rng.bernoulli(coupling)) a(i, j) = magnitude * rng.uniform(0.1, 1.0);
  }
  if (relabel) {
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    a = permute_similar(a, Permutation(std::move(perm)));
  }
  return a;
}

Matrix rescale_to_rho(const Matrix& a, double target) {
  const double rho = eigenvalues(a).rho;
  if (rho == 0.0) return a;
  return a.scaled(target / rho);
}

Matrix generate(const GenSpec& spec) {
  Matrix out;
  switch (spec.kind) {
    case GenKind::kNonnegIrreducible:
      out = nonneg_irreducible(spec.n, spec.density, spec.magnitude, spec.seed);
      break;
    case GenKind::kCyclicH:
      out = cyclic_h(spec.n, spec.h, spec.seed, spec.magnitude);
      break;
    case GenKind::kTp2:
      out = tp2(spec.n, spec.seed, spec.magnitude);
      break;
    case GenKind::kScrambled: {
      if (spec.children.size() != 1) throw std::invalid_argument("scrambled needs exactly one base spec");
      const Matrix base = generate(spec.children.front());
      const auto j = spec.j_set ? *spec.j_set : random_subset(base.n(), spec.seed);
      out = scrambled(base, j);
      break;
    }
    case GenKind::kReducibleBlocks: {
      std::vector<Matrix> blocks;
      for (const auto& child : spec.children) blocks.push_back(generate(child));
      out = reducible_blocks(blocks, spec.coupling, spec.relabel, spec.seed, spec.magnitude);
      break;
    }
  }
  if (spec.rho) out = rescale_to_rho(out, *spec.rho);
  return out;
}

}  // namespace signspectra
