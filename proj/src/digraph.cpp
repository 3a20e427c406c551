#include "signspectra/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

#include "signspectra/spectrum.hpp"

namespace signspectra {

Digraph::Digraph(const Matrix& a) : succ_(a.n()) {
  for (Index i = 0; i < a.n(); ++i)
    for (Index j = 0; j < a.n(); ++j)
      if (a(i, j) != 0.0) succ_[i].push_back(j);
}

bool Digraph::has_edge(Index i, Index j) const {
  return std::binary_search(succ_[i].begin(), succ_[i].end(), j);
}

std::vector<std::vector<Index>> Digraph::strong_components() const {
  // Iterative Tarjan.
  const Index n = succ_.size();
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> number(n, kUnset), low(n, 0), edge_pos(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Index> stack, call;
  std::vector<std::vector<Index>> comps;
  Index counter = 0;

  for (Index root = 0; root < n; ++root) {
    if (number[root] != kUnset) continue;
    call.push_back(root);
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      const Index v = call.back();
      if (edge_pos[v] < succ_[v].size()) {
        const Index w = succ_[v][edge_pos[v]++];
        if (number[w] == kUnset) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == number[v]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

bool is_irreducible(const Matrix& a) {
  if (a.n() == 1) return true;
  return Digraph(a).strong_components().size() == 1;
}

namespace {

// Shortest path from -> to (inclusive of both ends), BFS over successors.
std::vector<Index> shortest_path(const Digraph& g, Index from, Index to) {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> prev(g.n(), kUnset);
  std::deque<Index> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Index v : g.successors(u)) {
      if (prev[v] != kUnset) continue;
      prev[v] = u;
      queue.push_back(v);
    }
  }
  std::vector<Index> path;
  for (Index v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<Index>> irreducibility_path(const Matrix& a) {
  if (!is_irreducible(a)) return std::nullopt;
  const Digraph g(a);
  const Index n = a.n();
  std::vector<Index> walk{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  Index current = 0;
  for (Index target = 1; target < n; ++target) {
    if (visited[target]) continue;
    const auto leg = shortest_path(g, current, target);
    for (Index t = 1; t < leg.size(); ++t) {
      walk.push_back(leg[t]);
      visited[leg[t]] = 1;
    }
    current = target;
  }
  if (current != 0) {
    const auto back = shortest_path(g, current, 0);
    walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
  }
  return walk;
}

std::vector<Index> FrobeniusForm::block_sizes() const {
  std::vector<Index> sizes;
  for (const auto& b : blocks) sizes.push_back(b.indices.size());
  return sizes;
}

FrobeniusForm frobenius_form(const Matrix& a) {
  const Digraph g(a);
  auto comps = g.strong_components();
  const Index l = comps.size();
  std::vector<Index> comp_of(a.n());
  for (Index c = 0; c < l; ++c)
    for (Index i : comps[c]) comp_of[i] = c;

  // A block may be placed once every block it has edges into is placed.
  std::vector<std::vector<Index>> preds(l);
  std::vector<Index> pending(l, 0);
  {
    std::vector<std::vector<char>> seen(l);
    for (Index c = 0; c < l; ++c) seen[c].assign(l, 0);
    for (Index u = 0; u < a.n(); ++u)
      for (Index v : g.successors(u)) {
        const Index cu = comp_of[u], cv = comp_of[v];
        if (cu == cv || seen[cu][cv]) continue;
        seen[cu][cv] = 1;
        ++pending[cu];
        preds[cv].push_back(cu);
      }
  }
  using Entry = std::pair<Index, Index>;  // (least index, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (Index c = 0; c < l; ++c)
    if (pending[c] == 0) ready.emplace(comps[c].front(), c);

  FrobeniusForm form;
  std::vector<Index> order;
  while (!ready.empty()) {
    const Index c = ready.top().second;
    ready.pop();
    FrobeniusBlock block;
    block.indices = comps[c];
    block.block = principal_submatrix(a, block.indices);
    block.degenerate = block.indices.size() == 1 && block.block(0, 0) == 0.0;
    block.rho = block.indices.size() == 1 ? std::abs(block.block(0, 0))
                                          : eigenvalues(block.block).rho;
    form.rho = std::max(form.rho, block.rho);
    order.insert(order.end(), block.indices.begin(), block.indices.end());
    form.blocks.push_back(std::move(block));
    for (Index p : preds[c])
      if (--pending[p] == 0) ready.emplace(comps[p].front(), p);
  }
  form.perm = Permutation(std::move(order));
  return form;
}

ImprimitivityIndex imprimitivity_index(const Matrix& a) {
  if (!is_irreducible(a)) throw ReducibleInputError("imprimitivity index needs an irreducible matrix");
  const Digraph g(a);
  const Index n = a.n();
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> level(n, kUnset);
  level[0] = 0;
  std::deque<Index> queue{0};
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index v : g.successors(u)) {
      if (level[v] != kUnset) continue;
      level[v] = level[u] + 1;
      queue.push_back(v);
    }
  }
  Index h = 0;
  for (Index u = 0; u < n; ++u)
    for (Index v : g.successors(u)) {
      const Index lhs = level[u] + 1;
      const Index diff = lhs >= level[v] ? lhs - level[v] : level[v] - lhs;
      h = std::gcd(h, diff);
    }
  ImprimitivityIndex result;
  result.h = h == 0 ? 1 : h;
  if (result.h > 1) {
    result.cyclic_classes.resize(result.h);
    for (Index i = 0; i < n; ++i) result.cyclic_classes[level[i] % result.h].push_back(i);
  }
  return result;
}

bool is_primitive(const Matrix& a) {
  const bool primitive = imprimitivity_index(a).h == 1;
  // A nonzero diagonal entry is a loop, so it forces h = 1.
  if (!primitive && !a.has_zero_diagonal()) {
    throw std::logic_error("imprimitive matrix with a nonzero diagonal entry");
  }
  return primitive;
}

}  // namespace signspectra
