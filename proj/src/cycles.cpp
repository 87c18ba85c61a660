#include "lgpmh/cycles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::absent: return "absent";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

enum class Stop { exhausted, by_visitor, budget };

class HamiltonEngine {
 public:
  HamiltonEngine(const Graph& g, const HamiltonQuery& q, SearchMeter& meter,
                 const std::function<bool(const CycleWalk&)>& visit)
      : g_(g), colour_(q.edge_colour), meter_(meter), visit_(visit) {
    const auto n = static_cast<std::size_t>(g.order());
    if (!colour_.empty() && colour_.size() != static_cast<std::size_t>(g.size()))
      fail(ErrorKind::precondition, "edge colouring does not cover every edge");
    forced_.assign(n, {-1, -1});
    for (const Edge& e : q.forced) {
      if (!g.adjacent(e.u, e.v))
        fail(ErrorKind::precondition, "forced edge " + to_string(e) + " is not in the graph");
      for (Vertex x : {e.u, e.v}) {
        auto& slot = forced_[static_cast<std::size_t>(x)];
        const Vertex y = e.other(x);
        if (slot[0] == y || slot[1] == y) continue;
        if (slot[0] < 0) {
          slot[0] = y;
        } else if (slot[1] < 0) {
          slot[1] = y;
        } else {
          fail(ErrorKind::precondition,
               "vertex " + std::to_string(x) + " has more than two forced edges");
        }
      }
    }
    visited_.assign(n, 0);
    avail_.resize(n);
    for (Vertex v = 0; v < g.order(); ++v) avail_[static_cast<std::size_t>(v)] = g.degree(v);
    mark_.assign(n, 0);
  }

  Stop run() {
    if (!meter_.tick()) return Stop::budget;
    const int n = g_.order();
    if (n < 3 || g_.min_degree() < 2) return Stop::exhausted;

    // Start at a forced vertex when there is one, else at a minimum-degree one.
    start_ = -1;
    for (int want = 2; want >= 1 && start_ < 0; --want)
      for (Vertex v = 0; v < n && start_ < 0; ++v)
        if (forced_count(v) == want) start_ = v;
    if (start_ < 0) {
      start_ = 0;
      for (Vertex v = 1; v < n; ++v)
        if (g_.degree(v) < g_.degree(start_)) start_ = v;
    }
    visited_[static_cast<std::size_t>(start_)] = 1;
    path_.push_back(start_);

    const auto& f = forced_[static_cast<std::size_t>(start_)];
    if (f[0] >= 0) {
      start_forced_ = true;
      const Vertex first = f[1] >= 0 ? std::min(f[0], f[1]) : f[0];
      close_from_ = f[1] >= 0 ? std::max(f[0], f[1]) : -1;
      if (!colour_.empty() && close_from_ >= 0 &&
          colour_of(start_, first) == colour_of(start_, close_from_))
        return Stop::exhausted;
      return step_to(first);
    }
    return dfs();
  }

 private:
  int forced_count(Vertex v) const {
    const auto& f = forced_[static_cast<std::size_t>(v)];
    return (f[0] >= 0) + (f[1] >= 0);
  }
  bool is_forced(Vertex a, Vertex b) const {
    const auto& f = forced_[static_cast<std::size_t>(a)];
    return f[0] == b || f[1] == b;
  }
  int colour_of(Vertex a, Vertex b) const {
    return colour_[static_cast<std::size_t>(g_.edge_id(a, b))];
  }
  bool seen(Vertex v) const { return visited_[static_cast<std::size_t>(v)] != 0; }

  Stop close_cycle(Vertex cur) {
    if (!g_.adjacent(cur, start_)) return Stop::exhausted;
    const Vertex prev = path_[path_.size() - 2];
    for (Vertex r : forced_[static_cast<std::size_t>(cur)])
      if (r >= 0 && r != prev && r != start_) return Stop::exhausted;
    if (close_from_ >= 0 && cur != close_from_) return Stop::exhausted;
    if (!start_forced_ && path_[1] > cur) return Stop::exhausted;  // mirror image
    if (!colour_.empty()) {
      const int closing = colour_of(cur, start_);
      if (closing == colour_of(prev, cur) || closing == colour_of(start_, path_[1]))
        return Stop::exhausted;
    }
    CycleWalk w = close_walk(path_, static_cast<WalkFlags>(WalkKind::cycle | WalkKind::hamiltonian));
    w.kinds = w.kinds | WalkKind::tour | WalkKind::dominating;
    if (!found_) found_ = w;
    if (visit_ && !visit_(w)) return Stop::by_visitor;
    if (!visit_) return Stop::by_visitor;
    return Stop::exhausted;
  }

  Stop dfs() {
    if (!meter_.tick()) return Stop::budget;
    const Vertex cur = path_.back();
    if (path_.size() == static_cast<std::size_t>(g_.order())) return close_cycle(cur);
    const Vertex prev = path_.size() >= 2 ? path_[path_.size() - 2] : -1;

    std::vector<Vertex> cand;
    Vertex pending = -1;
    for (Vertex r : forced_[static_cast<std::size_t>(cur)]) {
      if (r < 0 || r == prev) continue;
      if (pending >= 0) return Stop::exhausted;  // entered via a free edge with two forced
      pending = r;
    }
    if (pending >= 0) {
      if (seen(pending)) return Stop::exhausted;
      cand.push_back(pending);
    } else {
      const bool last = path_.size() + 1 == static_cast<std::size_t>(g_.order());
      Vertex must = -1;
      for (Vertex w : g_.neighbors(cur)) {
        if (seen(w)) continue;
        if (!last && cur != start_ && avail_[static_cast<std::size_t>(w)] <= 2) {
          if (must >= 0) return Stop::exhausted;
          must = w;
        }
      }
      for (Vertex w : g_.neighbors(cur)) {
        if (seen(w) || (must >= 0 && w != must)) continue;
        if (forced_count(w) == 2) continue;
        const Vertex x = forced_[static_cast<std::size_t>(w)][0];
        if (x >= 0 && seen(x) && !(x == start_ && last)) continue;
        if (x == start_ && !last) continue;
        cand.push_back(w);
      }
      if (!colour_.empty() && cand.size() > 1) {
        // Least constraining first: after entering w with colour k, w's
        // remaining edges of colour k become unusable.
        auto cost = [&](Vertex w) {
          const int k = colour_of(cur, w);
          int c = 0;
          for (Vertex y : g_.neighbors(w))
            if (y != cur && !seen(y) && colour_of(w, y) == k) ++c;
          return c;
        };
        std::stable_sort(cand.begin(), cand.end(),
                         [&](Vertex a, Vertex b) { return cost(a) < cost(b); });
      }
    }

    for (Vertex w : cand) {
      if (!colour_.empty() && prev >= 0 && colour_of(prev, cur) == colour_of(cur, w)) continue;
      Stop s = step_to(w);
      if (s != Stop::exhausted) return s;
    }
    return Stop::exhausted;
  }

  // Extends the path from its current end to w, recurses, and undoes.
  Stop step_to(Vertex w) {
    const Vertex cur = path_.back();
    const bool cur_interior = cur != start_;
    bool dead = false;
    if (cur_interior) {
      for (Vertex y : g_.neighbors(cur)) {
        int& a = avail_[static_cast<std::size_t>(y)];
        --a;
        if (!seen(y) && y != w && a < 2) dead = true;
      }
    }
    visited_[static_cast<std::size_t>(w)] = 1;
    path_.push_back(w);

    Stop s = Stop::exhausted;
    if (!dead && reachable_ok()) s = dfs();

    path_.pop_back();
    visited_[static_cast<std::size_t>(w)] = 0;
    if (cur_interior)
      for (Vertex y : g_.neighbors(cur)) ++avail_[static_cast<std::size_t>(y)];
    return s;
  }

  // All unvisited vertices must be reachable from the path end through
  // unvisited vertices, and the start must still have an exit to close on.
  bool reachable_ok() {
    const auto remaining = static_cast<std::size_t>(g_.order()) - path_.size();
    if (remaining == 0) return true;
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    stack_.clear();
    stack_.push_back(path_.back());
    std::size_t reached = 0;
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      for (Vertex y : g_.neighbors(x)) {
        if (seen(y) || mark_[static_cast<std::size_t>(y)] == epoch_) continue;
        mark_[static_cast<std::size_t>(y)] = epoch_;
        ++reached;
        stack_.push_back(y);
      }
    }
    if (reached != remaining) return false;
    for (Vertex y : g_.neighbors(start_))
      if (!seen(y)) return true;
    return false;
  }

 public:
  std::optional<CycleWalk> found_;

 private:
  const Graph& g_;
  const std::vector<int>& colour_;
  SearchMeter& meter_;
  const std::function<bool(const CycleWalk&)>& visit_;
  std::vector<std::array<Vertex, 2>> forced_;
  std::vector<char> visited_;
  std::vector<int> avail_;
  std::vector<Vertex> path_;
  Vertex start_ = -1;
  Vertex close_from_ = -1;
  bool start_forced_ = false;
  std::vector<unsigned> mark_;
  unsigned epoch_ = 0;
  std::vector<Vertex> stack_;
};

CycleWalk lift(const CycleWalk& w, const std::vector<Vertex>& to_parent, WalkFlags kinds) {
  CycleWalk out{{}, kinds};
  for (Vertex v : w.vertices) out.vertices.push_back(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

// Euler circuit of the edge subset `use` (all degrees even, connected),
// smallest neighbour first.
std::vector<Vertex> hierholzer(const Graph& g, const std::vector<char>& use, Vertex start) {
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{start}, circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbors(v);
    auto& i = next[static_cast<std::size_t>(v)];
    while (i < nb.size()) {
      const int id = g.edge_id(v, nb[i]);
      if (use[static_cast<std::size_t>(id)] && !used[static_cast<std::size_t>(id)]) break;
      ++i;
    }
    if (i == nb.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const int id = g.edge_id(v, nb[i]);
      used[static_cast<std::size_t>(id)] = 1;
      stack.push_back(nb[i]);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

bool combinations_next(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

SearchResult<CycleWalk> search_hamiltonian(const Graph& g, const HamiltonQuery& query,
                                           SearchMeter& meter,
                                           const std::function<bool(const CycleWalk&)>& visit) {
  const std::uint64_t before = meter.nodes();
  HamiltonEngine engine(g, query, meter, visit);
  const Stop s = engine.run();
  SearchResult<CycleWalk> r;
  r.nodes = meter.nodes() - before;
  r.witness = engine.found_;
  if (r.witness)
    r.outcome = Outcome::found;
  else
    r.outcome = s == Stop::budget ? Outcome::inconclusive : Outcome::absent;
  return r;
}

SearchResult<CycleWalk> find_hamiltonian_cycle(const Graph& g, const std::vector<Edge>& forced,
                                               SearchBudget budget) {
  SearchMeter meter(budget);
  return search_hamiltonian(g, HamiltonQuery{forced, {}}, meter);
}

CycleCount count_hamiltonian_cycles(const Graph& g, const HamiltonQuery& query,
                                    SearchBudget budget) {
  SearchMeter meter(budget);
  CycleCount c;
  auto r = search_hamiltonian(g, query, meter, [&](const CycleWalk&) {
    ++c.count;
    return true;
  });
  c.nodes = r.nodes;
  c.outcome = meter.exhausted() ? Outcome::inconclusive : Outcome::found;
  return c;
}

std::optional<bool> is_hamiltonian(const Graph& g, SearchBudget budget) {
  auto r = find_hamiltonian_cycle(g, {}, budget);
  if (r.inconclusive()) return std::nullopt;
  return r.found();
}

SearchResult<CycleWalk> find_dominating_cycle(const Graph& g,
                                              const std::vector<Vertex>& allowed_untouched,
                                              SearchBudget budget) {
  SearchMeter meter(budget);
  SearchResult<CycleWalk> result;
  std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : allowed_untouched) {
    if (!g.has_vertex(v)) fail(ErrorKind::lookup, "no vertex " + std::to_string(v));
    allowed[static_cast<std::size_t>(v)] = 1;
  }
  // Vertices of degree < 2 can never be on a cycle.
  std::vector<Vertex> must, free_choice;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) {
      if (!allowed[static_cast<std::size_t>(v)]) {
        meter.tick();
        result.nodes = meter.nodes();
        return result;
      }
      must.push_back(v);
    } else if (allowed[static_cast<std::size_t>(v)]) {
      free_choice.push_back(v);
    }
  }

  const int k_max = static_cast<int>(free_choice.size());
  for (int k = 0; k <= k_max; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<Vertex> drop = must;
      for (int i : idx) drop.push_back(free_choice[static_cast<std::size_t>(i)]);
      std::vector<char> out(static_cast<std::size_t>(g.order()), 0);
      for (Vertex v : drop) out[static_cast<std::size_t>(v)] = 1;
      // Untouched set must be independent for the cycle to dominate.
      bool independent = true;
      for (const Edge& e : g.edges())
        if (out[static_cast<std::size_t>(e.u)] && out[static_cast<std::size_t>(e.v)]) {
          independent = false;
          break;
        }
      if (!independent || g.order() - static_cast<int>(drop.size()) < 3) continue;
      auto sub = remove_vertices(g, drop);
      auto r = search_hamiltonian(sub.graph, {}, meter);
      if (r.found()) {
        WalkFlags f = WalkKind::cycle | WalkKind::tour;
        f = f | WalkKind::dominating;
        if (drop.empty()) f = f | WalkKind::hamiltonian;
        result.outcome = Outcome::found;
        result.witness = lift(*r.witness, sub.to_parent, f);
        result.nodes = meter.nodes();
        return result;
      }
      if (r.inconclusive()) {
        result.outcome = Outcome::inconclusive;
        result.nodes = meter.nodes();
        return result;
      }
    } while (k > 0 && combinations_next(idx, k_max));
  }
  if (meter.nodes() == 0) meter.tick();
  result.nodes = meter.nodes();
  return result;
}

SearchResult<CycleWalk> find_dominating_tour(const Graph& g, SearchBudget budget) {
  require_connected(g, "find_dominating_tour");
  SearchMeter meter(budget);
  SearchResult<CycleWalk> result;
  const WalkFlags kinds = WalkKind::tour | WalkKind::dominating;
  meter.tick();

  // Trivial tour: a vertex covering every edge.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.size()) {
      result.outcome = Outcome::found;
      result.witness = CycleWalk{{v}, kinds};
      result.nodes = meter.nodes();
      return result;
    }
  }
  std::vector<char> all(static_cast<std::size_t>(g.size()), 1);
  if (all_degrees_even(g)) {
    result.outcome = Outcome::found;
    result.witness = CycleWalk{hierholzer(g, all, 0), kinds | WalkKind::euler};
    result.nodes = meter.nodes();
    return result;
  }

  // Every non-trivial closed trail traverses a connected even subgraph, so
  // enumerate the cycle space via Gray code over fundamental cycles.
  const auto n = static_cast<std::size_t>(g.order());
  const auto m = static_cast<std::size_t>(g.size());
  std::vector<int> parent(n, -1), depth(n, 0), parent_edge(n, -1);
  std::vector<char> tree(m, 0), seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex v = queue[h];
    for (Vertex w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      const int id = g.edge_id(v, w);
      parent_edge[static_cast<std::size_t>(w)] = id;
      tree[static_cast<std::size_t>(id)] = 1;
      queue.push_back(w);
    }
  }
  std::vector<std::vector<int>> fundamental;
  for (std::size_t id = 0; id < m; ++id) {
    if (tree[id]) continue;
    std::vector<int> cyc{static_cast<int>(id)};
    Vertex a = g.edge(static_cast<int>(id)).u, b = g.edge(static_cast<int>(id)).v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      cyc.push_back(parent_edge[static_cast<std::size_t>(a)]);
      a = parent[static_cast<std::size_t>(a)];
    }
    fundamental.push_back(std::move(cyc));
  }
  const std::size_t dim = fundamental.size();
  if (dim >= 63) fail(ErrorKind::capacity, "cycle space too large for exhaustive tour search");

  std::vector<char> in(m, 0);
  std::vector<int> deg(n, 0);
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    if (!meter.tick()) {
      result.outcome = Outcome::inconclusive;
      result.nodes = meter.nodes();
      return result;
    }
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    for (int id : fundamental[flip]) {
      const Edge e = g.edge(id);
      const int d = in[static_cast<std::size_t>(id)] ? -1 : 1;
      in[static_cast<std::size_t>(id)] ^= 1;
      deg[static_cast<std::size_t>(e.u)] += d;
      deg[static_cast<std::size_t>(e.v)] += d;
    }
    bool dominates = true;
    for (const Edge& e : g.edges())
      if (!deg[static_cast<std::size_t>(e.u)] && !deg[static_cast<std::size_t>(e.v)]) {
        dominates = false;
        break;
      }
    if (!dominates) continue;
    // Connectivity of the chosen edge set.
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
      return x;
    };
    Vertex any = -1;
    for (std::size_t id = 0; id < m; ++id) {
      if (!in[id]) continue;
      const Edge e = g.edge(static_cast<int>(id));
      comp[static_cast<std::size_t>(find(e.u))] = find(e.v);
      any = e.u;
    }
    bool connected = true;
    for (Vertex v = 0; v < g.order(); ++v)
      if (deg[static_cast<std::size_t>(v)] && find(v) != find(any)) {
        connected = false;
        break;
      }
    if (!connected) continue;
    result.outcome = Outcome::found;
    result.witness = CycleWalk{hierholzer(g, in, any), kinds};
    result.nodes = meter.nodes();
    return result;
  }
  result.nodes = meter.nodes();
  return result;
}

bool has_dominating_tour(const Graph& g) { return find_dominating_tour(g).found(); }

std::optional<CycleWalk> euler_tour(const Graph& g) {
  require_connected(g, "euler_tour");
  if (!all_degrees_even(g)) return std::nullopt;
  if (g.size() == 0) return CycleWalk{{0}, WalkKind::tour | WalkKind::euler};
  std::vector<char> all(static_cast<std::size_t>(g.size()), 1);
  return CycleWalk{hierholzer(g, all, 0),
                   static_cast<WalkFlags>(WalkKind::tour | WalkKind::euler | WalkKind::dominating)};
}

TraceabilityVerdict is_arbitrarily_traceable(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) return {false, "bad_vertex"};
  if (!is_connected(g)) return {false, "disconnected"};
  if (!all_degrees_even(g)) return {false, "not_eulerian"};
  const std::vector<Vertex> drop{v};
  if (!is_acyclic(remove_vertices(g, drop).graph)) return {false, "cycle_avoids_vertex"};
  return {true, "ok"};
}

std::optional<bool> is_hypohamiltonian(const Graph& g, SearchBudget budget) {
  SearchMeter meter(budget);
  auto whole = search_hamiltonian(g, {}, meter);
  if (whole.found()) return false;
  bool unsure = whole.inconclusive();
  if (g.order() < 4) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::vector<Vertex> drop{v};
    auto r = search_hamiltonian(remove_vertices(g, drop).graph, {}, meter);
    if (r.absent()) return false;
    if (r.inconclusive()) unsure = true;
  }
  if (unsure) return std::nullopt;
  return true;
}

SearchResult<CycleWalk> longest_cycle(const Graph& g, SearchBudget budget) {
  if (is_acyclic(g)) fail(ErrorKind::structure, "circumference: graph has no cycle");
  SearchMeter meter(budget);
  SearchResult<CycleWalk> result;
  const WalkFlags kinds = WalkKind::cycle | WalkKind::tour;
  auto finish = [&](Outcome o) {
    result.outcome = o;
    result.nodes = meter.nodes();
    return result;
  };

  auto whole = search_hamiltonian(g, {}, meter);
  if (whole.found()) {
    result.witness = whole.witness;
    return finish(Outcome::found);
  }
  if (whole.inconclusive()) return finish(Outcome::inconclusive);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::vector<Vertex> drop{v};
    auto sub = remove_vertices(g, drop);
    auto r = search_hamiltonian(sub.graph, {}, meter);
    if (r.found()) {
      result.witness = lift(*r.witness, sub.to_parent, kinds);
      return finish(Outcome::found);
    }
    if (r.inconclusive()) return finish(Outcome::inconclusive);
  }

  // Branch and bound over cycles whose smallest vertex is `s`.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> on(n, 0);
  std::vector<Vertex> path, best;
  std::vector<char> mark(n, 0);
  bool out_of_budget = false;
  Vertex s = 0;
  auto bound = [&](Vertex from) {
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<Vertex> st{from};
    std::size_t reach = 0;
    while (!st.empty()) {
      const Vertex x = st.back();
      st.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (y <= s || on[static_cast<std::size_t>(y)] || mark[static_cast<std::size_t>(y)]) continue;
        mark[static_cast<std::size_t>(y)] = 1;
        ++reach;
        st.push_back(y);
      }
    }
    return path.size() + reach;
  };
  std::function<void()> dfs = [&]() {
    if (out_of_budget) return;
    if (!meter.tick()) {
      out_of_budget = true;
      return;
    }
    const Vertex cur = path.back();
    if (path.size() >= 3 && path.size() > best.size() && g.adjacent(cur, s) && path[1] < cur)
      best = path;
    if (bound(cur) <= best.size()) return;
    for (Vertex w : g.neighbors(cur)) {
      if (w <= s || on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      on[static_cast<std::size_t>(w)] = 0;
      if (out_of_budget) return;
    }
  };
  for (s = 0; s < g.order() && !out_of_budget; ++s) {
    if (static_cast<std::size_t>(g.order() - s) <= best.size()) break;
    on[static_cast<std::size_t>(s)] = 1;
    path = {s};
    dfs();
    on[static_cast<std::size_t>(s)] = 0;
  }
  if (out_of_budget) return finish(Outcome::inconclusive);
  result.witness = close_walk(best, kinds);
  return finish(Outcome::found);
}

int circumference(const Graph& g) {
  auto r = longest_cycle(g);
  return static_cast<int>(r.witness->length());
}

}  // namespace lgpmh
