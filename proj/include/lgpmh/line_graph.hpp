#pragma once

#include <vector>

#include "lgpmh/graph.hpp"

namespace lgpmh {

/// L(G) together with the edge <-> vertex bijection. Vertex i of `lg`
/// is edge i (dense id) of `base`, so both maps are the identity on ids;
/// from_lg/to_lg make the correspondence explicit at call sites.
struct LineGraphMap {
  Graph base;
  Graph lg;

  Edge from_lg(Vertex x) const { return base.edge(x); }
  Vertex to_lg(const Edge& e) const { return base.edge_id(e.u, e.v); }
  Vertex to_lg(Vertex u, Vertex v) const { return base.edge_id(u, v); }
  /// Base vertex shared by adjacent lg vertices x and y.
  Vertex shared_endpoint(Vertex x, Vertex y) const;
};

/// Requires g connected with more than 2 vertices (Error(precondition)).
LineGraphMap build_line_graph(const Graph& g);

/// Unchecked line graph construction, for any graph.
Graph line_graph_of(const Graph& g);

struct Clique {
  Vertex center;                // base vertex v
  std::vector<Vertex> members;  // lg vertices of edges incident to v, ascending
};

/// Canonical clique partition of E(L(G)): one clique per base vertex of
/// degree >= 2.
struct CliquePartition {
  std::vector<Clique> cliques;
  /// Index into `cliques` for every base vertex, -1 for degree <= 1.
  std::vector<int> clique_of_center;

  const Clique* find(Vertex center) const;
};

CliquePartition canonical_partition(const LineGraphMap& lgm);

/// Centre of the unique clique containing lg edge e.
/// Throws Error(lookup) if e is not an edge of lgm.lg.
Vertex clique_of_lg_edge(const LineGraphMap& lgm, const CliquePartition& cp, const Edge& e);

}  // namespace lgpmh
