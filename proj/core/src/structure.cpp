#include "subshift/structure.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix support(const IntMatrix& m) {
  BoolMatrix s(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i][j] = m(i, j) > 0;
  return s;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix c(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

bool all_true(const BoolMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const std::vector<bool>& r) {
    return std::all_of(r.begin(), r.end(), [](bool x) { return x; });
  });
}

// Tarjan's algorithm; returns the component id of every vertex.
std::vector<int> strong_components(const BoolMatrix& adj, int& count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  count = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

bool primitive(const IntMatrix& block) {
  const std::size_t n = block.rows();
  BoolMatrix s = support(block), p = s;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (all_true(p)) return true;
    p = bool_product(p, s);
  }
  return false;
}

std::string letter_set(const std::string& letters) {
  std::string out = "{";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += letters[i];
  }
  return out + "}";
}

}  // namespace

IntMatrix incidence_matrix(const Substitution& sigma) {
  const Alphabet& A = sigma.alphabet();
  IntMatrix m(A.size(), A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (char c : sigma.image_at(i)) ++m(i, A.index(c));
  return m;
}

std::vector<std::vector<bool>> support_power(const IntMatrix& m, unsigned k) {
  BoolMatrix s = support(m);
  BoolMatrix r(m.rows(), std::vector<bool>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) r[i][i] = true;
  for (unsigned j = 0; j < k; ++j) r = bool_product(r, s);
  return r;
}

ComponentChain component_chain(const Substitution& sigma) {
  const Alphabet& A = sigma.alphabet();
  const std::size_t n = A.size();
  IntMatrix M = incidence_matrix(sigma);
  BoolMatrix adj = support(M);

  int ncomp = 0;
  std::vector<int> comp = strong_components(adj, ncomp);

  // reach[x][y]: component x reaches component y (reflexive).
  BoolMatrix reach(ncomp, std::vector<bool>(ncomp));
  for (int c = 0; c < ncomp; ++c) reach[c][c] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (adj[a][b]) reach[comp[a]][comp[b]] = true;
  for (int k = 0; k < ncomp; ++k)
    for (int i = 0; i < ncomp; ++i)
      if (reach[i][k])
        for (int j = 0; j < ncomp; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<std::string> members(ncomp);
  for (std::size_t a = 0; a < n; ++a) members[comp[a]].push_back(A[a]);

  for (int x = 0; x < ncomp; ++x)
    for (int y = x + 1; y < ncomp; ++y)
      if (!reach[x][y] && !reach[y][x])
        throw NotSomePrimitiveComponents(
            "components " + letter_set(members[x]) + " and " +
            letter_set(members[y]) + " are not ordered by reachability");

  // Bottom level first: a component reaching fewer components is lower.
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  auto reach_count = [&](int c) {
    return std::count(reach[c].begin(), reach[c].end(), true);
  };
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return reach_count(x) < reach_count(y); });

  ComponentChain chain;
  chain.alphabet = A;
  chain.level_index.assign(n, 0);
  std::vector<bool> in_level(n, false);
  for (int li = 0; li < ncomp; ++li) {
    int c = order[li];
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < n; ++a) {
      if (comp[a] != c) continue;
      idx.push_back(a);
      in_level[a] = true;
      chain.level_index[a] = li + 1;
    }
    IntMatrix Q = M.sub(idx, idx);
    if (idx.size() == 1 && Q(0, 0) == 0)
      throw NotSomePrimitiveComponents(
          std::string("letter '") + A[idx[0]] +
          "' does not occur in any of its own iterated images");
    if (!primitive(Q))
      throw NotSomePrimitiveComponents("diagonal block on " +
                                       letter_set(members[c]) +
                                       " is irreducible but not primitive");
    chain.blocks.push_back(Q);
    chain.new_letters.push_back(
        A.filter([&](char ch) { return comp[A.index(ch)] == c; }));
    chain.levels.push_back(A.filter([&](char ch) { return in_level[A.index(ch)]; }));
  }

  // Least uniform power k with b in sigma^k(a) for a new at level i, b in A_i.
  std::size_t bound = (n - 1) * (n - 1) + 1 + n, sum = 0;
  for (const auto& Q : chain.blocks) sum += (Q.rows() - 1) * (Q.rows() - 1) + 2;
  bound = std::max(bound, sum);
  BoolMatrix P = adj;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (chain.level_index[b] <= chain.level_index[a] && !P[a][b]) ok = false;
    if (ok) {
      chain.witness_k = static_cast<unsigned>(k);
      return chain;
    }
    P = bool_product(P, adj);
  }
  throw NotSomePrimitiveComponents("no uniform power reaches every lower letter");
}

ComponentChain ComponentChain::truncated(std::size_t i) const {
  if (i < 1 || i > size()) throw ArgumentError("level out of range");
  ComponentChain c;
  c.alphabet = levels[i - 1];
  c.levels.assign(levels.begin(), levels.begin() + i);
  c.new_letters.assign(new_letters.begin(), new_letters.begin() + i);
  c.blocks.assign(blocks.begin(), blocks.begin() + i);
  for (char ch : c.alphabet.letters()) c.level_index.push_back(level_of(ch));
  c.witness_k = witness_k;
  return c;
}

Substitution sub_substitution(const Substitution& sigma,
                              const ComponentChain& chain, std::size_t i) {
  if (i < 1 || i > chain.size()) throw ArgumentError("level out of range");
  return sigma.restricted(chain.level(i));
}

IntMatrix off_diagonal_block(const Substitution& sigma,
                             const ComponentChain& chain, std::size_t i,
                             std::size_t j) {
  if (i < 1 || j < 1 || i > chain.size() || j > chain.size())
    throw ArgumentError("level out of range");
  const Alphabet& A = sigma.alphabet();
  std::vector<std::size_t> r, c;
  for (char ch : chain.fresh(i).letters()) r.push_back(A.index(ch));
  for (char ch : chain.fresh(j).letters()) c.push_back(A.index(ch));
  return incidence_matrix(sigma).sub(r, c);
}

bool is_empty_bottom(const Substitution& sigma, const ComponentChain& chain) {
  const Alphabet& A1 = chain.level(1);
  return A1.size() == 1 && sigma.image(A1[0]) == std::string(1, A1[0]);
}

}  // namespace subshift
