#include "lgpmh/extension.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgpmh/cycles.hpp"
#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

namespace {

constexpr WalkFlags kHamiltonianFlags =
    WalkKind::cycle | WalkKind::tour | WalkKind::hamiltonian | WalkKind::dominating;

void require_perfect(const LineGraphMap& lgm, const Matching& m, const char* op) {
  if (!is_perfect_matching(lgm.lg, m))
    fail(ErrorKind::precondition, std::string(op) + ": not a perfect matching of the line graph");
}

// Marks base vertices whose clique contains a matching edge.
std::vector<char> cliques_meeting(const LineGraphMap& lgm, const Matching& m) {
  std::vector<char> meets(static_cast<std::size_t>(lgm.base.order()), 0);
  for (const Edge& e : m) meets[static_cast<std::size_t>(lgm.shared_endpoint(e.u, e.v))] = 1;
  return meets;
}

void validate_extension(const LineGraphMap& lgm, const Matching& m, const CycleWalk& w,
                        const char* op) {
  if (!is_hamiltonian_cycle(lgm.lg, w.vertices) || !walk_contains_edges(w.vertices, m))
    fail(ErrorKind::construction,
         std::string(op) + ": assembled walk is not a Hamiltonian cycle containing the matching");
}

}  // namespace

CycleWalk extend_via_dominating_cycle(const LineGraphMap& lgm, const Matching& m,
                                      const CycleWalk& d) {
  const Graph& g = lgm.base;
  if (g.max_degree() > 3)
    fail(ErrorKind::precondition, "extend_via_dominating_cycle: base max degree exceeds 3");
  require_perfect(lgm, m, "extend_via_dominating_cycle");
  if (!is_cycle(g, d.vertices) || !is_dominating(g, d.vertices))
    fail(ErrorKind::precondition, "extend_via_dominating_cycle: d is not a dominating cycle");

  const auto meets = cliques_meeting(lgm, m);
  std::vector<char> on_d(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : d.vertices) on_d[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!on_d[static_cast<std::size_t>(v)] && meets[static_cast<std::size_t>(v)])
      fail(ErrorKind::precondition,
           "extend_via_dominating_cycle: vertex " + std::to_string(v) +
               " is untouched by the dominating cycle but its clique meets the matching");

  std::set<Edge> matched(m.begin(), m.end());
  const auto& cyc = d.vertices;
  const std::size_t s = cyc.size() - 1;
  std::vector<Vertex> walk;
  for (std::size_t i = 0; i < s; ++i) {
    const Vertex v = cyc[i];
    const Vertex prev = cyc[(i + s - 1) % s];
    const Vertex next = cyc[i + 1];
    const Vertex entry = lgm.to_lg(prev, v);
    const Vertex exit = lgm.to_lg(v, next);
    if (!meets[static_cast<std::size_t>(v)]) {
      walk.push_back(entry);  // clique traversed by its entry-exit edge
      continue;
    }
    // The clique has at most three vertices, so the candidate paths are the
    // direct edge and the detours through the third vertex.
    std::vector<Vertex> inside;
    for (Vertex w : g.neighbors(v)) inside.push_back(lgm.to_lg(v, w));
    std::vector<std::vector<Vertex>> options{{entry, exit}};
    for (Vertex x : inside)
      if (x != entry && x != exit) options.push_back({entry, x, exit});
    const std::vector<Vertex>* chosen = nullptr;
    for (const auto& p : options) {
      std::set<Edge> on_path;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) on_path.emplace(p[k], p[k + 1]);
      bool ok = true;
      for (const Edge& e : m)
        if (lgm.shared_endpoint(e.u, e.v) == v && !on_path.contains(e)) ok = false;
      if (ok) {
        chosen = &p;
        break;
      }
    }
    if (!chosen)
      fail(ErrorKind::construction, "extend_via_dominating_cycle: no path through clique " +
                                        std::to_string(v) + " contains its matching edge");
    walk.insert(walk.end(), chosen->begin(), chosen->end() - 1);
  }
  CycleWalk out = close_walk(std::move(walk), kHamiltonianFlags);
  validate_extension(lgm, m, out, "extend_via_dominating_cycle");
  return out;
}

SearchResult<CycleWalk> extend_matching_subcubic(const LineGraphMap& lgm, const Matching& m,
                                                 SearchBudget budget) {
  if (lgm.base.max_degree() > 3)
    fail(ErrorKind::precondition, "extend_matching_subcubic: base max degree exceeds 3");
  require_perfect(lgm, m, "extend_matching_subcubic");
  const auto meets = cliques_meeting(lgm, m);
  std::vector<Vertex> allowed;
  for (Vertex v = 0; v < lgm.base.order(); ++v)
    if (!meets[static_cast<std::size_t>(v)]) allowed.push_back(v);
  auto dom = find_dominating_cycle(lgm.base, allowed, budget);
  SearchResult<CycleWalk> out;
  out.outcome = dom.outcome;
  out.nodes = dom.nodes;
  if (dom.found()) out.witness = extend_via_dominating_cycle(lgm, m, *dom.witness);
  return out;
}

KotzigPartition kotzig_partition(const Graph& g, const Matching& m, SearchBudget budget) {
  if (!g.is_regular(3)) fail(ErrorKind::precondition, "kotzig_partition: graph is not cubic");
  if (g.size() % 2 != 0) fail(ErrorKind::parity, "kotzig_partition: odd number of edges");
  const LineGraphMap lgm = build_line_graph(g);
  require_perfect(lgm, m, "kotzig_partition");
  auto ham = find_hamiltonian_cycle(g, {}, budget);
  if (ham.inconclusive()) throw BudgetExhausted("kotzig_partition: Hamiltonian search budget exhausted");
  if (!ham.found()) fail(ErrorKind::precondition, "kotzig_partition: graph is not Hamiltonian");

  KotzigPartition out;
  out.with_matching = extend_via_dominating_cycle(lgm, m, *ham.witness);
  const auto used = out.with_matching.edge_sequence();
  Graph rest = remove_edges(lgm.lg, used);
  // The remainder is 2-regular; walk it from vertex 0.
  std::vector<Vertex> seq{0};
  if (rest.is_regular(2)) {
    Vertex prev = -1, cur = 0;
    while (true) {
      const auto nb = rest.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      if (next == 0) break;
      seq.push_back(next);
      prev = cur;
      cur = next;
      if (seq.size() > static_cast<std::size_t>(rest.order())) break;
    }
  }
  out.complement = close_walk(std::move(seq), kHamiltonianFlags);
  if (!is_hamiltonian_cycle(lgm.lg, out.complement.vertices))
    fail(ErrorKind::construction, "kotzig_partition: complement is not a Hamiltonian cycle");
  return out;
}

CycleWalk extend_matching_arb_traceable(const LineGraphMap& lgm, Vertex v, const Matching& m,
                                        SearchBudget budget) {
  const Graph& g = lgm.base;
  const auto trace = is_arbitrarily_traceable(g, v);
  if (!trace.traceable)
    fail(ErrorKind::precondition, "extend_matching_arb_traceable: not arbitrarily traceable from " +
                                      std::to_string(v) + " (" + trace.reason + ")");
  if (g.size() % 2 != 0)
    fail(ErrorKind::parity, "extend_matching_arb_traceable: odd number of edges");
  require_perfect(lgm, m, "extend_matching_arb_traceable");

  // Arriving at a 3-path's centre along one of its edges forces leaving
  // along the partner, so each 3-path is traversed end to end. The walk is
  // therefore an Euler circuit of the multigraph joining the two ends of
  // every 3-path; run Hierholzer on it.
  const P3Decomposition d = matching_to_p3(lgm, m);
  struct Link {
    Vertex to;
    std::size_t path;
  };
  std::vector<std::vector<Link>> links(static_cast<std::size_t>(g.order()));
  for (std::size_t k = 0; k < d.paths.size(); ++k) {
    const Vertex a = d.paths[k].end_a(g), b = d.paths[k].end_b(g);
    links[static_cast<std::size_t>(a)].push_back({b, k});
    links[static_cast<std::size_t>(b)].push_back({a, k});
  }
  for (auto& l : links)
    std::sort(l.begin(), l.end(), [](const Link& x, const Link& y) {
      return std::pair(x.to, x.path) < std::pair(y.to, y.path);
    });
  Vertex start = v;
  if (links[static_cast<std::size_t>(v)].empty())
    for (Vertex x = 0; x < g.order(); ++x)
      if (!links[static_cast<std::size_t>(x)].empty()) {
        start = x;
        break;
      }

  std::vector<char> used(d.paths.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.order()), 0);
  // Stack of (vertex, path taken to reach it).
  std::vector<std::pair<Vertex, std::size_t>> stack{{start, d.paths.size()}};
  std::vector<std::pair<Vertex, std::size_t>> circuit;
  while (!stack.empty()) {
    const Vertex x = stack.back().first;
    auto& i = next[static_cast<std::size_t>(x)];
    const auto& lx = links[static_cast<std::size_t>(x)];
    while (i < lx.size() && used[lx[i].path]) ++i;
    if (i == lx.size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      used[lx[i].path] = 1;
      stack.push_back({lx[i].to, lx[i].path});
    }
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    // No Euler tour keeps every 3-path consecutive; search L(G) directly.
    auto r = find_hamiltonian_cycle(lgm.lg, m, budget);
    if (r.inconclusive())
      throw BudgetExhausted("extend_matching_arb_traceable: fallback search budget exhausted");
    if (!r.found())
      fail(ErrorKind::construction,
           "extend_matching_arb_traceable: matching lies on no Hamiltonian cycle of the line graph");
    validate_extension(lgm, m, *r.witness, "extend_matching_arb_traceable");
    return std::move(*r.witness);
  }

  std::reverse(circuit.begin(), circuit.end());
  std::vector<Vertex> walk;
  for (std::size_t k = 1; k < circuit.size(); ++k) {
    const Vertex from = circuit[k - 1].first;
    const P3Path& p = d.paths[circuit[k].second];
    walk.push_back(lgm.to_lg(from, p.center));
    walk.push_back(lgm.to_lg(p.center, circuit[k].first));
  }
  CycleWalk out = close_walk(std::move(walk), kHamiltonianFlags);
  validate_extension(lgm, m, out, "extend_matching_arb_traceable");
  return out;
}

}  // namespace lgpmh
