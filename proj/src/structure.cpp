#include "lgpmh/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "lgpmh/error.hpp"

namespace lgpmh {

namespace {

std::vector<int> component_labels(const Graph& g, int* count) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

}  // namespace

int component_count(const Graph& g) {
  int c = 0;
  component_labels(g, &c);
  return c;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) fail(ErrorKind::structure, std::string(what) + ": graph is disconnected");
}

bool is_acyclic(const Graph& g) { return g.size() == g.order() - component_count(g); }

bool all_degrees_even(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        auto yi = static_cast<std::size_t>(y);
        if (dist[yi] < 0) {
          dist[yi] = dist[static_cast<std::size_t>(x)] + 1;
          parent[yi] = x;
          q.push(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          int len = dist[static_cast<std::size_t>(x)] + dist[yi] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g, "bridges");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    auto vi = static_cast<std::size_t>(v);
    disc[vi] = low[vi] = timer++;
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (w == parent) continue;  // simple graph: at most one parent edge
      if (disc[wi] >= 0) {
        low[vi] = std::min(low[vi], disc[wi]);
      } else {
        dfs(w, v);
        low[vi] = std::min(low[vi], low[wi]);
        if (low[wi] > disc[vi]) out.emplace_back(v, w);
      }
    }
  };
  if (g.order() > 0) dfs(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        auto& sy = side[static_cast<std::size_t>(y)];
        if (sy < 0) {
          sy = 1 - side[static_cast<std::size_t>(x)];
          q.push(y);
        } else if (sy == side[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!g.has_vertex(sorted[i]))
      fail(ErrorKind::lookup, "no vertex " + std::to_string(sorted[i]));
    local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = local[static_cast<std::size_t>(e.u)], b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return {Graph(static_cast<int>(sorted.size()), std::move(edges)), std::move(sorted)};
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> dropped(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : drop) {
    if (!g.has_vertex(v)) fail(ErrorKind::lookup, "no vertex " + std::to_string(v));
    dropped[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!dropped[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph remove_edges(const Graph& g, std::span<const Edge> drop) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (const Edge& e : drop) gone[static_cast<std::size_t>(g.edge_id(e.u, e.v))] = 1;
  std::vector<Edge> edges;
  for (int id = 0; id < g.size(); ++id)
    if (!gone[static_cast<std::size_t>(id)]) edges.push_back(g.edge(id));
  return Graph(g.order(), std::move(edges));
}

}  // namespace lgpmh
