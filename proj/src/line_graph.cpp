#include "lgpmh/line_graph.hpp"

#include <algorithm>

#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

Vertex LineGraphMap::shared_endpoint(Vertex x, Vertex y) const {
  const Edge a = from_lg(x), b = from_lg(y);
  if (x == y || !(b.has(a.u) || b.has(a.v)))
    fail(ErrorKind::lookup, "lg vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                " are not adjacent");
  return b.has(a.u) ? a.u : a.v;
}

Graph line_graph_of(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        edges.emplace_back(g.edge_id(v, nb[i]), g.edge_id(v, nb[j]));
  }
  return Graph(g.size(), std::move(edges));
}

LineGraphMap build_line_graph(const Graph& g) {
  if (g.order() <= 2)
    fail(ErrorKind::precondition, "line graph requires order > 2, got " + std::to_string(g.order()));
  if (!is_connected(g)) fail(ErrorKind::precondition, "line graph requires a connected graph");
  return LineGraphMap{g, line_graph_of(g)};
}

const Clique* CliquePartition::find(Vertex center) const {
  if (center < 0 || static_cast<std::size_t>(center) >= clique_of_center.size()) return nullptr;
  const int idx = clique_of_center[static_cast<std::size_t>(center)];
  return idx < 0 ? nullptr : &cliques[static_cast<std::size_t>(idx)];
}

CliquePartition canonical_partition(const LineGraphMap& lgm) {
  CliquePartition cp;
  cp.clique_of_center.assign(static_cast<std::size_t>(lgm.base.order()), -1);
  for (Vertex v = 0; v < lgm.base.order(); ++v) {
    if (lgm.base.degree(v) < 2) continue;
    Clique q{v, {}};
    for (Vertex w : lgm.base.neighbors(v)) q.members.push_back(lgm.to_lg(v, w));
    std::sort(q.members.begin(), q.members.end());
    cp.clique_of_center[static_cast<std::size_t>(v)] = static_cast<int>(cp.cliques.size());
    cp.cliques.push_back(std::move(q));
  }
  return cp;
}

Vertex clique_of_lg_edge(const LineGraphMap& lgm, const CliquePartition& cp, const Edge& e) {
  if (!lgm.lg.adjacent(e.u, e.v))
    fail(ErrorKind::lookup, "lg edge " + to_string(e) + " does not exist");
  const Vertex c = lgm.shared_endpoint(e.u, e.v);
  if (!cp.find(c)) fail(ErrorKind::lookup, "no clique centred at " + std::to_string(c));
  return c;
}

}  // namespace lgpmh
