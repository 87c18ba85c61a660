#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgpmh/graph.hpp"

namespace lgpmh {

/// Canonical labeled member of a named family.
///
/// Tags and parameters:
///   complete [n]          K_n
///   bipartite [m] | [a,b] K_{m,m} / K_{a,b}, first side is 0..a-1
///   cycle [n]             C_n, n >= 3
///   path [n]              P_n on n vertices
///   star [k]              K_{1,k}, hub 0
///   petersen []           Kneser graph K(5,2), 2-subsets in lex order
///   prism [k=3]           two k-cycles 0..k-1 and k..2k-1, spokes i~i+k
///   moebius [n]           n-cycle plus the n/2 long diagonals, n even >= 4
///   cube [d=3]            hypercube Q_d on bitmasks
///   bowtie []             triangles 0-1-2 and 0-3-4
///   dsquare []            squares 0-1-2-3 and 0-4-5-6 sharing vertex 0
///   gpetersen [n,k]       generalized Petersen GP(n,k)
///   flower [k]            flower snark J_k, k odd >= 3
///
/// Throws Error(parameter) for unknown tags or invalid parameters.
Graph make_named_graph(std::string_view tag, std::span<const int> params = {});

/// Tags accepted by make_named_graph.
std::vector<std::string> named_graph_tags();

}  // namespace lgpmh
