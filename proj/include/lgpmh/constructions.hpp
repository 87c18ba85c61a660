#pragma once

#include <array>
#include <vector>

#include "lgpmh/graph.hpp"
#include "lgpmh/matching.hpp"
#include "lgpmh/search.hpp"

namespace lgpmh {

using Triangle = std::array<Vertex, 3>;

enum class SurgeryKind { y_extension, y_reduction };

/// Where a Y-operation was applied and how vertex ids moved.
struct Surgery {
  SurgeryKind kind = SurgeryKind::y_extension;
  /// The expanded vertex, or the contracted triangle (ascending).
  std::vector<Vertex> site;
  /// Image of every input vertex in the output.
  std::vector<Vertex> old_to_new;
  /// Input vertex each output vertex came from.
  std::vector<Vertex> new_to_old;
};

struct SurgeryResult {
  Graph graph;
  Surgery surgery;
};

/// Replaces degree-3 vertex v by a triangle {v, n, n+1}; the neighbours
/// of v, ascending, attach to v, n and n+1 respectively.
SurgeryResult y_extension(const Graph& g, Vertex v);

/// Contracts triangle t to its smallest vertex; the two others are
/// removed and the remaining ids compacted in order. Each triangle vertex
/// must have exactly one neighbour outside t, and those neighbours must be
/// distinct.
SurgeryResult y_reduction(const Graph& g, const Triangle& t);

struct ExpansionResult {
  Graph graph;
  Vertex kept = 0;
  /// One triangle per expanded vertex, in ascending order of that vertex.
  std::vector<Triangle> triangles;
  /// Original vertex of every output vertex.
  std::vector<Vertex> origin;
};

/// Y-extension at every vertex except `keep`. g must be cubic,
/// hypohamiltonian and of odd size; the result has even size. Throws
/// BudgetExhausted when the hypohamiltonicity check runs out.
ExpansionResult expand_all_but_one(const Graph& g, Vertex keep, SearchBudget budget = {});

struct MatchingReduction {
  /// L(g) - m with every m-free clique triangle contracted.
  Graph reduced;
  /// The contracted triangles, as line-graph vertex ids.
  std::vector<Triangle> triangles;
  bool isomorphic = false;
};

/// Removes m from L(g), Y-reduces the canonical triangles m does not
/// meet and compares the result with g. g must be cubic of even size and
/// m a perfect matching of L(g).
MatchingReduction reduce_matching_complement(const Graph& g, const Matching& m);

}  // namespace lgpmh
