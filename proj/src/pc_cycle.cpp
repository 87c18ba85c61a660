#include "lgpmh/pc_cycle.hpp"

#include <algorithm>
#include <map>

#include "lgpmh/error.hpp"
#include "lgpmh/extension.hpp"
#include "lgpmh/generators.hpp"

namespace lgpmh {

namespace {

constexpr WalkFlags kHamiltonianFlags =
    WalkKind::cycle | WalkKind::tour | WalkKind::hamiltonian | WalkKind::dominating;

void require_perfect(const LineGraphMap& lgm, const Matching& m, const char* op) {
  if (!is_perfect_matching(lgm.lg, m))
    fail(ErrorKind::precondition, std::string(op) + ": not a perfect matching of the line graph");
}

}  // namespace

EdgeColouring colouring_from_matching(const LineGraphMap& lgm, const Matching& m) {
  require_perfect(lgm, m, "colouring_from_matching");
  Matching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  EdgeColouring c;
  c.colour.assign(static_cast<std::size_t>(lgm.base.size()), -1);
  for (const Edge& e : sorted) {
    c.colour[static_cast<std::size_t>(e.u)] = c.colour_count;
    c.colour[static_cast<std::size_t>(e.v)] = c.colour_count;
    ++c.colour_count;
  }
  if (!at_most_two_per_colour(lgm.base, c))
    fail(ErrorKind::construction, "colouring_from_matching: a vertex meets three edges of one colour");
  return c;
}

bool at_most_two_per_colour(const Graph& g, const EdgeColouring& c) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::map<int, int> seen;
    for (Vertex w : g.neighbors(v))
      if (++seen[c.colour.at(static_cast<std::size_t>(g.edge_id(v, w)))] >= 3) return false;
  }
  return true;
}

PcCycleResult find_pc_hamiltonian_cycle(const Graph& g, const EdgeColouring& c,
                                        SearchBudget budget) {
  if (c.colour.size() != static_cast<std::size_t>(g.size()))
    fail(ErrorKind::precondition, "find_pc_hamiltonian_cycle: colouring does not cover every edge");
  SearchMeter meter(budget);
  PcCycleResult r;
  r.search = search_hamiltonian(g, HamiltonQuery{{}, c.colour}, meter);
  r.daykin_hypothesis = at_most_two_per_colour(g, c);
  return r;
}

CycleCount count_pc_hamiltonian_cycles(const Graph& g, const EdgeColouring& c,
                                       SearchBudget budget) {
  if (c.colour.size() != static_cast<std::size_t>(g.size()))
    fail(ErrorKind::precondition, "count_pc_hamiltonian_cycles: colouring does not cover every edge");
  return count_hamiltonian_cycles(g, HamiltonQuery{{}, c.colour}, budget);
}

std::vector<Vertex> stitch_clique_path(const Clique& q, Vertex entry, Vertex exit,
                                       const Matching& inside) {
  auto member = [&](Vertex x) {
    return std::binary_search(q.members.begin(), q.members.end(), x);
  };
  if (entry == exit) fail(ErrorKind::precondition, "stitch_clique_path: entry equals exit");
  if (!member(entry) || !member(exit))
    fail(ErrorKind::precondition, "stitch_clique_path: entry or exit outside the clique");
  std::map<Vertex, Vertex> partner;
  for (const Edge& e : inside) {
    if (!member(e.u) || !member(e.v))
      fail(ErrorKind::precondition, "stitch_clique_path: matching edge " + to_string(e) +
                                        " is not inside the clique");
    if (!partner.emplace(e.u, e.v).second || !partner.emplace(e.v, e.u).second)
      fail(ErrorKind::precondition, "stitch_clique_path: edges inside the clique are not a matching");
  }
  if (partner.contains(entry) && partner.at(entry) == exit)
    fail(ErrorKind::precondition, "stitch_clique_path: entry-exit edge belongs to the matching");

  std::vector<Vertex> path{entry};
  if (partner.contains(entry)) path.push_back(partner.at(entry));
  Matching rest;
  for (const Edge& e : inside)
    if (!e.has(entry) && !e.has(exit)) rest.push_back(e);
  std::sort(rest.begin(), rest.end());
  for (const Edge& e : rest) {
    path.push_back(e.u);
    path.push_back(e.v);
  }
  if (partner.contains(exit)) path.push_back(partner.at(exit));
  path.push_back(exit);
  return path;
}

SearchResult<CycleWalk> extend_via_pc_cycle(const LineGraphMap& lgm, const Matching& m,
                                            SearchBudget budget) {
  const EdgeColouring c = colouring_from_matching(lgm, m);
  PcCycleResult pc = find_pc_hamiltonian_cycle(lgm.base, c, budget);
  SearchResult<CycleWalk> out;
  out.outcome = pc.search.outcome;
  out.nodes = pc.search.nodes;
  if (!pc.search.found()) return out;

  const CliquePartition cp = canonical_partition(lgm);
  std::vector<Matching> inside(static_cast<std::size_t>(lgm.base.order()));
  for (const Edge& e : m)
    inside[static_cast<std::size_t>(lgm.shared_endpoint(e.u, e.v))].push_back(e);

  const auto& cyc = pc.search.witness->vertices;
  const std::size_t n = cyc.size() - 1;
  std::vector<Vertex> walk;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = cyc[i];
    const Vertex entry = lgm.to_lg(cyc[(i + n - 1) % n], v);
    const Vertex exit = lgm.to_lg(v, cyc[i + 1]);
    const auto path = stitch_clique_path(*cp.find(v), entry, exit, inside[static_cast<std::size_t>(v)]);
    walk.insert(walk.end(), path.begin(), path.end() - 1);
  }
  out.witness = close_walk(std::move(walk), kHamiltonianFlags);
  if (!is_hamiltonian_cycle(lgm.lg, out.witness->vertices) ||
      !walk_contains_edges(out.witness->vertices, m))
    fail(ErrorKind::construction,
         "extend_via_pc_cycle: stitched walk is not a Hamiltonian cycle containing the matching");
  return out;
}

SearchResult<CycleWalk> extend_matching_complete(int n, const Matching& m, SearchBudget budget) {
  if (n < 4) fail(ErrorKind::parameter, "extend_matching_complete: n must be at least 4");
  if (n % 4 != 0 && n % 4 != 1)
    fail(ErrorKind::parity, "extend_matching_complete: K_" + std::to_string(n) +
                                " has an odd number of edges (need n = 0,1 mod 4)");
  const int params[] = {n};
  const LineGraphMap lgm = build_line_graph(make_named_graph("complete", params));
  require_perfect(lgm, m, "extend_matching_complete");
  if (n == 4) return extend_matching_subcubic(lgm, m, budget);
  auto r = extend_via_pc_cycle(lgm, m, budget);
  if (r.absent())
    fail(ErrorKind::construction,
         "extend_matching_complete: no properly coloured Hamiltonian cycle of K_" + std::to_string(n));
  return r;
}

SearchResult<CycleWalk> extend_matching_bipartite(int side, const Matching& m, SearchBudget budget) {
  if (side < 2) fail(ErrorKind::parameter, "extend_matching_bipartite: side must be at least 2");
  if (side % 2 != 0)
    fail(ErrorKind::parity, "extend_matching_bipartite: K_{" + std::to_string(side) + "," +
                                std::to_string(side) + "} has an odd number of edges");
  const int params[] = {side};
  const LineGraphMap lgm = build_line_graph(make_named_graph("bipartite", params));
  require_perfect(lgm, m, "extend_matching_bipartite");
  if (side == 2) return extend_matching_subcubic(lgm, m, budget);
  auto r = extend_via_pc_cycle(lgm, m, budget);
  if (r.absent()) r.outcome = Outcome::inconclusive;
  return r;
}

}  // namespace lgpmh
