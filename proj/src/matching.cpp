#include "lgpmh/matching.hpp"

#include <algorithm>

#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

namespace {

// Backtracking over the lowest uncovered vertex. Partners are tried in
// ascending order (or shuffled when rng is set).
class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, std::mt19937_64* rng = nullptr)
      : g_(g), mate_(static_cast<std::size_t>(g.order()), -1), rng_(rng) {}

  bool force(const Edge& e) {
    if (!g_.adjacent(e.u, e.v)) return false;
    if (mate(e.u) >= 0 || mate(e.v) >= 0) return false;
    mate(e.u) = e.v;
    mate(e.v) = e.u;
    return true;
  }

  // Returns false if stopped early.
  bool run(const std::function<bool(const Matching&)>& visit) {
    Vertex v = 0;
    while (v < g_.order() && mate(v) >= 0) ++v;
    if (v == g_.order()) {
      Matching m;
      for (Vertex x = 0; x < g_.order(); ++x)
        if (x < mate(x)) m.emplace_back(x, mate(x));
      return visit(m);
    }
    std::vector<Vertex> options;
    for (Vertex w : g_.neighbors(v))
      if (mate(w) < 0) options.push_back(w);
    if (rng_) std::shuffle(options.begin(), options.end(), *rng_);
    for (Vertex w : options) {
      mate(v) = w;
      mate(w) = v;
      const bool dead = isolated_after(v, w);
      bool go_on = dead ? true : run(visit);
      mate(v) = -1;
      mate(w) = -1;
      if (!go_on) return false;
    }
    return true;
  }

 private:
  int& mate(Vertex v) { return mate_[static_cast<std::size_t>(v)]; }

  // Some uncovered neighbour of v or w has lost its last free partner.
  bool isolated_after(Vertex v, Vertex w) {
    for (Vertex end : {v, w}) {
      for (Vertex x : g_.neighbors(end)) {
        if (mate(x) >= 0) continue;
        bool has_free = false;
        for (Vertex y : g_.neighbors(x))
          if (mate(y) < 0) {
            has_free = true;
            break;
          }
        if (!has_free) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> mate_;
  std::mt19937_64* rng_;
};

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m) {
    if (!g.adjacent(e.u, e.v)) return false;
    for (Vertex x : {e.u, e.v}) {
      if (seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_matching(g, m) && 2 * m.size() == static_cast<std::size_t>(g.order());
}

std::uint64_t enumerate_perfect_matchings(const Graph& g,
                                          const std::function<bool(const Matching&)>& visit) {
  std::uint64_t count = 0;
  if (g.order() % 2 != 0) return 0;
  MatchingSearch search(g);
  search.run([&](const Matching& m) {
    ++count;
    return visit(m);
  });
  return count;
}

std::vector<Matching> all_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  enumerate_perfect_matchings(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  return enumerate_perfect_matchings(g, [](const Matching&) { return true; });
}

std::optional<Matching> find_perfect_matching(const Graph& g, const std::vector<Edge>& forced) {
  if (g.order() % 2 != 0) return std::nullopt;
  MatchingSearch search(g);
  for (const Edge& e : forced)
    if (!search.force(e)) return std::nullopt;
  std::optional<Matching> found;
  search.run([&](const Matching& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<Matching> random_perfect_matching(const Graph& g, std::mt19937_64& rng) {
  if (g.order() % 2 != 0) return std::nullopt;
  MatchingSearch search(g, &rng);
  std::optional<Matching> found;
  search.run([&](const Matching& m) {
    found = m;
    return false;
  });
  return found;
}

bool is_p3_decomposition(const Graph& base, const P3Decomposition& d) {
  std::vector<int> uses(static_cast<std::size_t>(base.size()), 0);
  for (const P3Path& p : d.paths) {
    if (p.first < 0 || p.second < 0 || p.first >= base.size() || p.second >= base.size() ||
        p.first == p.second)
      return false;
    const Edge a = base.edge(p.first), b = base.edge(p.second);
    if (!a.has(p.center) || !b.has(p.center)) return false;
    if (a.other(p.center) == b.other(p.center)) return false;
    ++uses[static_cast<std::size_t>(p.first)];
    ++uses[static_cast<std::size_t>(p.second)];
  }
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
}

P3Decomposition matching_to_p3(const LineGraphMap& lgm, const Matching& m) {
  if (!is_matching(lgm.lg, m))
    fail(ErrorKind::precondition, "matching_to_p3: input is not a matching of the line graph");
  std::vector<char> covered(static_cast<std::size_t>(lgm.lg.order()), 0);
  for (const Edge& e : m) covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = 1;
  for (Vertex x = 0; x < lgm.lg.order(); ++x)
    if (!covered[static_cast<std::size_t>(x)])
      fail(ErrorKind::precondition, "matching_to_p3: lg vertex " + std::to_string(x) +
                                        " (edge " + to_string(lgm.from_lg(x)) + ") is uncovered");
  P3Decomposition d;
  for (const Edge& e : m) d.paths.push_back({lgm.shared_endpoint(e.u, e.v), e.u, e.v});
  std::sort(d.paths.begin(), d.paths.end(), [](const P3Path& a, const P3Path& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  return d;
}

Matching p3_to_matching(const LineGraphMap& lgm, const P3Decomposition& d) {
  if (!is_p3_decomposition(lgm.base, d))
    fail(ErrorKind::precondition, "p3_to_matching: not a P3-decomposition of the base graph");
  Matching m;
  for (const P3Path& p : d.paths) m.emplace_back(p.first, p.second);
  std::sort(m.begin(), m.end());
  return m;
}

P3Decomposition find_p3_decomposition(const Graph& g) {
  require_connected(g, "find_p3_decomposition");
  if (g.size() % 2 != 0)
    fail(ErrorKind::parity, "find_p3_decomposition: odd edge count " + std::to_string(g.size()));

  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> parent_edge(n, -1), order;
  std::vector<char> seen(n, 0), tree(static_cast<std::size_t>(g.size()), 0);
  // Iterative DFS for the spanning tree and a preorder.
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      const int id = g.edge_id(v, w);
      parent_edge[static_cast<std::size_t>(w)] = id;
      tree[static_cast<std::size_t>(id)] = 1;
      stack.push_back(w);
    }
  }
  // Non-tree edges are owned by their later (deeper-in-preorder) endpoint.
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> pending(n);
  for (int id = 0; id < g.size(); ++id) {
    if (tree[static_cast<std::size_t>(id)]) continue;
    const Edge e = g.edge(id);
    const Vertex owner = rank[static_cast<std::size_t>(e.u)] > rank[static_cast<std::size_t>(e.v)] ? e.u : e.v;
    pending[static_cast<std::size_t>(owner)].push_back(id);
  }

  P3Decomposition d;
  auto pair_up = [&](Vertex v, std::vector<int>& ids) {
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i + 1 < ids.size(); i += 2) d.paths.push_back({v, ids[i], ids[i + 1]});
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& mine = pending[static_cast<std::size_t>(v)];
    const int up = parent_edge[static_cast<std::size_t>(v)];
    if (mine.size() % 2 == 1) {
      if (up < 0) fail(ErrorKind::construction, "find_p3_decomposition: odd remainder at root");
      mine.push_back(up);
    } else if (up >= 0) {
      const Edge e = g.edge(up);
      pending[static_cast<std::size_t>(e.other(v))].push_back(up);
    }
    pair_up(v, mine);
  }
  std::sort(d.paths.begin(), d.paths.end(), [](const P3Path& a, const P3Path& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  return d;
}

ExtendabilityVerdict one_extendability_check(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!find_perfect_matching(g, {e})) return {false, e};
  return {};
}

}  // namespace lgpmh
