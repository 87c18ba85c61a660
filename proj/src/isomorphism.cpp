#include "lgpmh/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

namespace {

// Stable colour refinement run on the disjoint union of the inputs, so that
// colours are comparable across graphs.
std::vector<int> refine_colours(const std::vector<const Graph*>& graphs) {
  std::vector<std::pair<const Graph*, Vertex>> verts;
  for (const Graph* g : graphs)
    for (Vertex v = 0; v < g->order(); ++v) verts.emplace_back(g, v);
  std::vector<std::size_t> offset;
  std::size_t acc = 0;
  for (const Graph* g : graphs) {
    offset.push_back(acc);
    acc += static_cast<std::size_t>(g->order());
  }
  std::vector<int> colour(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) colour[i] = verts[i].first->degree(verts[i].second);

  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto gi = static_cast<std::size_t>(
          std::find(graphs.begin(), graphs.end(), verts[i].first) - graphs.begin());
      sig[i].push_back(colour[i]);
      std::vector<int> nb;
      for (Vertex w : verts[i].first->neighbors(verts[i].second))
        nb.push_back(colour[offset[gi] + static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
      ids.emplace(sig[i], 0);
    }
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t i = 0; i < verts.size(); ++i) colour[i] = ids[sig[i]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const auto n = static_cast<std::size_t>(a.order());
    map_.assign(n, -1);
    used_.assign(n, 0);
    // Order: rarest colour first, then grow along adjacency.
    std::map<int, int> freq;
    for (int c : ca_) ++freq[c];
    std::vector<char> placed(n, 0);
    while (order_.size() < n) {
      Vertex best = -1;
      int best_key = 0;
      for (Vertex v = 0; v < a.order(); ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int linked = 0;
        for (Vertex w : a.neighbors(v)) linked += placed[static_cast<std::size_t>(w)];
        // Prefer vertices adjacent to already placed ones, then rare colours.
        int key = -linked * 1000 + freq[ca_[static_cast<std::size_t>(v)]];
        if (best < 0 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (cb_[static_cast<std::size_t>(w)] != ca_[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex x = order_[i];
        ok = a_.adjacent(v, x) == b_.adjacent(w, map_[static_cast<std::size_t>(x)]);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      if (run(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = 0;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  std::vector<Vertex> mapping() const { return map_; }

 private:
  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// ---- canonical labeling -------------------------------------------------

using Cells = std::vector<std::vector<Vertex>>;

// Equitable refinement: split every cell by neighbour counts into every
// cell, ordering pieces by their count vectors so the result does not
// depend on the input labeling.
Cells refine(const Graph& g, Cells cells) {
  while (true) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> cell_of(n);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<Vertex>> parts;
      for (Vertex v : cell) {
        std::vector<int> counts(cells.size(), 0);
        for (Vertex w : g.neighbors(v)) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
        parts[counts].push_back(v);
      }
      for (auto& [k, part] : parts) next.push_back(std::move(part));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

std::uint64_t code_for(const Graph& g, const Cells& discrete) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < discrete.size(); ++i) pos[static_cast<std::size_t>(discrete[i][0])] = static_cast<int>(i);
  std::uint64_t code = 0;
  const int n = g.order();
  // Bit index of pair (i<j) in graph6 column order.
  for (const Edge& e : g.edges()) {
    int i = pos[static_cast<std::size_t>(e.u)], j = pos[static_cast<std::size_t>(e.v)];
    if (i > j) std::swap(i, j);
    const int bit = j * (j - 1) / 2 + i;
    code |= std::uint64_t{1} << bit;
  }
  (void)n;
  return code;
}

void canon_search(const Graph& g, const Cells& cells, std::uint64_t& best, Cells& best_cells,
                  bool& have) {
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    const std::uint64_t code = code_for(g, cells);
    if (!have || code > best) {
      best = code;
      best_cells = cells;
      have = true;
    }
    return;
  }
  const auto idx = static_cast<std::size_t>(target - cells.begin());
  for (Vertex v : cells[idx]) {
    Cells split;
    split.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != idx) {
        split.push_back(cells[c]);
        continue;
      }
      split.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[c])
        if (w != v) rest.push_back(w);
      split.push_back(std::move(rest));
    }
    canon_search(g, refine(g, std::move(split)), best, best_cells, have);
  }
}

Cells canonical_cells(const Graph& g) {
  if (g.order() > 11) fail(ErrorKind::capacity, "canonical form limited to 11 vertices");
  Cells start(1);
  for (Vertex v = 0; v < g.order(); ++v) start[0].push_back(v);
  if (g.order() == 0) return {};
  std::uint64_t best = 0;
  Cells best_cells;
  bool have = false;
  canon_search(g, refine(g, start), best, best_cells, have);
  return best_cells;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                     int max_order) {
  if (g1.order() > max_order || g2.order() > max_order)
    fail(ErrorKind::capacity, "isomorphism test limited to " + std::to_string(max_order) +
                                  " vertices");
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  const auto colours = refine_colours({&g1, &g2});
  const auto n = static_cast<std::size_t>(g1.order());
  std::vector<int> c1(colours.begin(), colours.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<int> c2(colours.begin() + static_cast<std::ptrdiff_t>(n), colours.end());
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  IsoSearch search(g1, g2, std::move(c1), std::move(c2));
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() == 0) return 0;
  return code_for(g, canonical_cells(g));
}

Graph canonical_form(const Graph& g) {
  const Cells cells = canonical_cells(g);
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < cells.size(); ++i) pos[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
  return Graph(g.order(), std::move(edges));
}

std::vector<Graph> all_graphs(int n, int max_degree) {
  if (n < 0) fail(ErrorKind::parameter, "negative order");
  if (n > 11) fail(ErrorKind::capacity, "graph enumeration limited to 11 vertices");
  std::vector<Graph> level{Graph(0, {})};
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Graph> seen;
    const Vertex fresh = k - 1;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << fresh); ++mask) {
        if (max_degree >= 0 && std::popcount(mask) > max_degree) continue;
        bool ok = true;
        std::vector<Edge> edges = g.edges();
        for (Vertex v = 0; v < fresh; ++v) {
          if (!(mask & (std::uint32_t{1} << v))) continue;
          if (max_degree >= 0 && g.degree(v) + 1 > max_degree) {
            ok = false;
            break;
          }
          edges.emplace_back(v, fresh);
        }
        if (!ok) continue;
        Graph h(k, std::move(edges));
        const std::uint64_t code = canonical_code(h);
        if (!seen.contains(code)) seen.emplace(code, canonical_form(h));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> connected_graphs(int min_order, int max_order, int max_degree) {
  std::vector<Graph> out;
  for (int n = std::max(min_order, 1); n <= max_order; ++n)
    for (Graph& g : all_graphs(n, max_degree))
      if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace lgpmh
