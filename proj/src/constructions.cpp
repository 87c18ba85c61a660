#include "lgpmh/constructions.hpp"

#include <algorithm>

#include "lgpmh/cycles.hpp"
#include "lgpmh/error.hpp"
#include "lgpmh/isomorphism.hpp"
#include "lgpmh/line_graph.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

SurgeryResult y_extension(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) fail(ErrorKind::lookup, "y_extension: no vertex " + std::to_string(v));
  if (g.degree(v) != 3)
    fail(ErrorKind::precondition, "y_extension: vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(g.degree(v)) + ", expected 3");
  const int n = g.order();
  const auto nb = g.neighbors(v);
  const Vertex corner[3] = {v, n, n + 1};
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!e.has(v)) edges.push_back(e);
  for (int i = 0; i < 3; ++i) edges.emplace_back(corner[i], nb[static_cast<std::size_t>(i)]);
  edges.emplace_back(v, n);
  edges.emplace_back(v, n + 1);
  edges.emplace_back(n, n + 1);

  SurgeryResult r{Graph(n + 2, std::move(edges)), {}};
  r.surgery.kind = SurgeryKind::y_extension;
  r.surgery.site = {v};
  for (Vertex x = 0; x < n; ++x) {
    r.surgery.old_to_new.push_back(x);
    r.surgery.new_to_old.push_back(x);
  }
  r.surgery.new_to_old.push_back(v);
  r.surgery.new_to_old.push_back(v);
  return r;
}

SurgeryResult y_reduction(const Graph& g, const Triangle& t) {
  Triangle s = t;
  std::sort(s.begin(), s.end());
  for (Vertex x : s)
    if (!g.has_vertex(x)) fail(ErrorKind::lookup, "y_reduction: no vertex " + std::to_string(x));
  if (s[0] == s[1] || s[1] == s[2] || !g.adjacent(s[0], s[1]) || !g.adjacent(s[1], s[2]) ||
      !g.adjacent(s[0], s[2]))
    fail(ErrorKind::precondition, "y_reduction: the given vertices do not form a triangle");
  Vertex outside[3];
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(s[static_cast<std::size_t>(i)]))
      if (std::find(s.begin(), s.end(), w) == s.end()) out.push_back(w);
    if (out.size() != 1)
      fail(ErrorKind::precondition, "y_reduction: vertex " + std::to_string(s[static_cast<std::size_t>(i)]) +
                                        " has " + std::to_string(out.size()) +
                                        " neighbours outside the triangle, expected 1");
    outside[i] = out[0];
  }
  if (outside[0] == outside[1] || outside[1] == outside[2] || outside[0] == outside[2])
    fail(ErrorKind::precondition,
         "y_reduction: outside neighbours coincide, contraction would create parallel edges");

  SurgeryResult r;
  r.surgery.kind = SurgeryKind::y_reduction;
  r.surgery.site.assign(s.begin(), s.end());
  r.surgery.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == s[1] || x == s[2]) continue;
    r.surgery.old_to_new[static_cast<std::size_t>(x)] = static_cast<Vertex>(r.surgery.new_to_old.size());
    r.surgery.new_to_old.push_back(x);
  }
  const Vertex hub = r.surgery.old_to_new[static_cast<std::size_t>(s[0])];
  r.surgery.old_to_new[static_cast<std::size_t>(s[1])] = hub;
  r.surgery.old_to_new[static_cast<std::size_t>(s[2])] = hub;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = r.surgery.old_to_new[static_cast<std::size_t>(e.u)];
    const Vertex b = r.surgery.old_to_new[static_cast<std::size_t>(e.v)];
    if (a != b) edges.emplace_back(a, b);
  }
  r.graph = Graph(static_cast<int>(r.surgery.new_to_old.size()), std::move(edges));
  return r;
}

ExpansionResult expand_all_but_one(const Graph& g, Vertex keep, SearchBudget budget) {
  if (!g.has_vertex(keep))
    fail(ErrorKind::lookup, "expand_all_but_one: no vertex " + std::to_string(keep));
  if (!g.is_regular(3)) fail(ErrorKind::precondition, "expand_all_but_one: graph is not cubic");
  if (g.size() % 2 == 0)
    fail(ErrorKind::parity, "expand_all_but_one: graph has an even number of edges, expected odd");
  const auto hypo = is_hypohamiltonian(g, budget);
  if (!hypo) throw BudgetExhausted("expand_all_but_one: hypohamiltonicity check budget exhausted");
  if (!*hypo) fail(ErrorKind::precondition, "expand_all_but_one: graph is not hypohamiltonian");

  ExpansionResult r;
  r.graph = g;
  r.kept = keep;
  for (Vertex x = 0; x < g.order(); ++x) r.origin.push_back(x);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == keep) continue;
    const Vertex n = r.graph.order();
    r.graph = y_extension(r.graph, v).graph;
    r.triangles.push_back({v, n, n + 1});
    r.origin.push_back(v);
    r.origin.push_back(v);
  }
  return r;
}

MatchingReduction reduce_matching_complement(const Graph& g, const Matching& m) {
  if (!g.is_regular(3))
    fail(ErrorKind::precondition, "reduce_matching_complement: graph is not cubic");
  if (g.size() % 2 != 0)
    fail(ErrorKind::parity, "reduce_matching_complement: graph has an odd number of edges");
  const LineGraphMap lgm = build_line_graph(g);
  if (!is_perfect_matching(lgm.lg, m))
    fail(ErrorKind::precondition,
         "reduce_matching_complement: not a perfect matching of the line graph");

  std::vector<char> meets(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m) meets[static_cast<std::size_t>(lgm.shared_endpoint(e.u, e.v))] = 1;

  MatchingReduction r;
  Graph h = remove_edges(lgm.lg, m);
  std::vector<Vertex> where(static_cast<std::size_t>(h.order()));
  for (Vertex x = 0; x < h.order(); ++x) where[static_cast<std::size_t>(x)] = x;
  for (const Clique& q : canonical_partition(lgm).cliques) {
    if (meets[static_cast<std::size_t>(q.center)]) continue;
    const Triangle t{q.members[0], q.members[1], q.members[2]};
    r.triangles.push_back(t);
    const auto step = y_reduction(h, {where[static_cast<std::size_t>(t[0])],
                                      where[static_cast<std::size_t>(t[1])],
                                      where[static_cast<std::size_t>(t[2])]});
    for (auto& w : where) w = step.surgery.old_to_new[static_cast<std::size_t>(w)];
    h = step.graph;
  }
  r.reduced = std::move(h);
  r.isomorphic = are_isomorphic(r.reduced, g);
  return r;
}

}  // namespace lgpmh
