#include "lgpmh/walk.hpp"

#include <algorithm>
#include <set>

namespace lgpmh {

std::vector<std::string> flag_names(WalkFlags f) {
  std::vector<std::string> out;
  if (has(f, WalkKind::cycle)) out.emplace_back("cycle");
  if (has(f, WalkKind::tour)) out.emplace_back("tour");
  if (has(f, WalkKind::euler)) out.emplace_back("euler");
  if (has(f, WalkKind::hamiltonian)) out.emplace_back("hamiltonian");
  if (has(f, WalkKind::dominating)) out.emplace_back("dominating");
  return out;
}

std::vector<Edge> CycleWalk::edge_sequence() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  return out;
}

std::vector<Vertex> CycleWalk::touched() const {
  std::vector<Vertex> t(vertices.begin(), vertices.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

bool CycleWalk::uses_edge(const Edge& e) const {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (Edge(vertices[i], vertices[i + 1]) == e) return true;
  return false;
}

CycleWalk close_walk(std::vector<Vertex> open, WalkFlags kinds) {
  if (open.size() > 1) open.push_back(open.front());
  return {std::move(open), kinds};
}

bool is_closed_walk(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  for (Vertex v : seq)
    if (!g.has_vertex(v)) return false;
  if (seq.size() == 1) return true;
  if (seq.front() != seq.back()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  return true;
}

bool is_cycle(const Graph& g, std::span<const Vertex> seq) {
  if (!is_closed_walk(g, seq) || seq.size() < 4) return false;
  std::set<Vertex> inner(seq.begin(), seq.end() - 1);
  return inner.size() == seq.size() - 1;
}

bool is_tour(const Graph& g, std::span<const Vertex> seq) {
  if (!is_closed_walk(g, seq)) return false;
  std::set<Edge> used;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!used.insert(Edge(seq[i], seq[i + 1])).second) return false;
  return true;
}

bool is_euler_tour(const Graph& g, std::span<const Vertex> seq) {
  if (!is_tour(g, seq)) return false;
  return seq.size() - 1 == static_cast<std::size_t>(g.size()) || (g.size() == 0 && seq.size() == 1);
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> seq) {
  return is_cycle(g, seq) && seq.size() - 1 == static_cast<std::size_t>(g.order());
}

bool is_dominating(const Graph& g, std::span<const Vertex> seq) {
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seq)
    if (g.has_vertex(v)) on[static_cast<std::size_t>(v)] = 1;
  for (const Edge& e : g.edges())
    if (!on[static_cast<std::size_t>(e.u)] && !on[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

bool walk_contains_edges(std::span<const Vertex> seq, std::span<const Edge> edges) {
  std::set<Edge> used;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) used.insert(Edge(seq[i], seq[i + 1]));
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return used.contains(e); });
}

WalkFlags actual_flags(const Graph& g, const CycleWalk& w) {
  WalkFlags f = 0;
  const auto& s = w.vertices;
  if (is_cycle(g, s)) f = f | WalkKind::cycle;
  if (is_tour(g, s)) f = f | WalkKind::tour;
  if (is_euler_tour(g, s)) f = f | WalkKind::euler;
  if (is_hamiltonian_cycle(g, s)) f = f | WalkKind::hamiltonian;
  if (is_closed_walk(g, s) && is_dominating(g, s)) f = f | WalkKind::dominating;
  return f;
}

bool claims_hold(const Graph& g, const CycleWalk& w) {
  return (actual_flags(g, w) & w.kinds) == w.kinds;
}

}  // namespace lgpmh
