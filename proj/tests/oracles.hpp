#pragma once

// Brute-force reference implementations used only by tests. They trade
// speed for obviousness and share no code with the library algorithms.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lgpmh/graph.hpp"
#include "lgpmh/matching.hpp"

namespace oracle {

using lgpmh::Edge;
using lgpmh::Graph;
using lgpmh::Matching;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Line graph straight from the definition: edges i<j adjacent iff they
/// share an endpoint.
inline std::set<std::pair<int, int>> line_graph_pairs(const Graph& g) {
  std::set<std::pair<int, int>> out;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].has(es[j].u) || es[i].has(es[j].v)) out.emplace(int(i), int(j));
  return out;
}

namespace detail {
inline void pair_highest(const std::vector<std::vector<char>>& a, std::vector<char>& used,
                         Matching& cur, std::set<Matching>& out) {
  int hi = -1;
  for (int v = int(used.size()) - 1; v >= 0; --v)
    if (!used[v]) {
      hi = v;
      break;
    }
  if (hi < 0) {
    Matching m = cur;
    std::sort(m.begin(), m.end());
    out.insert(m);
    return;
  }
  used[hi] = 1;
  for (int w = hi - 1; w >= 0; --w) {
    if (used[w] || !a[hi][w]) continue;
    used[w] = 1;
    cur.emplace_back(w, hi);
    pair_highest(a, used, cur, out);
    cur.pop_back();
    used[w] = 0;
  }
  used[hi] = 0;
}
}  // namespace detail

/// All perfect matchings, pairing the highest free vertex first.
inline std::set<Matching> perfect_matchings(const Graph& g) {
  std::set<Matching> out;
  if (g.order() % 2 != 0) return out;
  const auto a = adjacency_matrix(g);
  std::vector<char> used(g.order(), 0);
  Matching cur;
  detail::pair_highest(a, used, cur, out);
  return out;
}

using EdgeSet = std::set<Edge>;

/// Every Hamiltonian cycle as its edge set, by permuting vertices 1..n-1.
inline std::set<EdgeSet> hamiltonian_cycles(const Graph& g) {
  std::set<EdgeSet> out;
  const int n = g.order();
  if (n < 3) return out;
  const auto a = adjacency_matrix(g);
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (perm.front() > perm.back()) continue;
    bool ok = a[0][perm.front()] && a[perm.back()][0];
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = a[perm[i]][perm[i + 1]];
    if (!ok) continue;
    EdgeSet s{{0, perm.front()}, {perm.back(), 0}};
    for (int i = 0; i + 1 < n - 1; ++i) s.emplace(perm[i], perm[i + 1]);
    out.insert(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool contains_all(const EdgeSet& s, const Matching& m) {
  return std::all_of(m.begin(), m.end(), [&](const Edge& e) { return s.contains(e); });
}

/// Longest cycle length by trying every vertex subset (0 for forests).
inline int circumference(const Graph& g) {
  const int n = g.order();
  const auto a = adjacency_matrix(g);
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) vs.push_back(v);
    const int k = int(vs.size());
    if (k < 3 || k <= best) continue;
    std::vector<int> perm(vs.begin() + 1, vs.end());
    bool found = false;
    do {
      bool ok = a[vs[0]][perm.front()] && a[perm.back()][vs[0]];
      for (int i = 0; ok && i + 1 < k - 1; ++i) ok = a[perm[i]][perm[i + 1]];
      found = ok;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (found) best = k;
  }
  return best;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const auto b = adjacency_matrix(h);
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!b[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// graph6 from the published layout: N(n) then the upper triangle read
/// column by column, six bits per byte, offset 63. Orders below 63 only.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, char(63 + n));
  std::vector<int> bits;
  const auto a = adjacency_matrix(g);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j]);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = x * 2 + bits[k + b];
    out += char(63 + x);
  }
  return out;
}

/// Random relabeling of g.
template <class Rng>
inline Graph shuffled(const Graph& g, Rng& rng, std::vector<int>* perm_out = nullptr) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(p[e.u], p[e.v]);
  if (perm_out) *perm_out = p;
  return Graph(g.order(), es);
}

}  // namespace oracle
