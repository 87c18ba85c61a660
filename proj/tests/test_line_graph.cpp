#include <map>

#include "doctest.h"
#include "lgpmh/error.hpp"
#include "lgpmh/generators.hpp"
#include "lgpmh/isomorphism.hpp"
#include "lgpmh/line_graph.hpp"
#include "lgpmh/structure.hpp"
#include "oracles.hpp"

using namespace lgpmh;

namespace {
Graph named(std::string_view tag, std::vector<int> p = {}) { return make_named_graph(tag, p); }
}  // namespace

TEST_SUITE("line_graph") {
  TEST_CASE("small line graphs") {
    const auto c5 = build_line_graph(named("cycle", {5}));
    CHECK(are_isomorphic(c5.lg, named("cycle", {5})));
    const auto oct = build_line_graph(named("complete", {4}));
    CHECK(oct.lg.order() == 6);
    CHECK(oct.lg.size() == 12);
    CHECK(oct.lg.is_regular(4));
    const auto star = build_line_graph(named("star", {3}));
    CHECK(star.lg == named("complete", {3}));
  }

  TEST_CASE("line graph matches the definition on every small connected graph") {
    for (const auto& g : connected_graphs(3, 7)) {
      const auto lgm = build_line_graph(g);
      REQUIRE(lgm.lg.order() == g.size());
      const auto pairs = oracle::line_graph_pairs(g);
      CHECK(lgm.lg.size() == int(pairs.size()));
      for (const auto& [a, b] : pairs) CHECK(lgm.lg.adjacent(a, b));
      for (Vertex x = 0; x < lgm.lg.order(); ++x) {
        CHECK(lgm.to_lg(lgm.from_lg(x)) == x);
        const Edge e = lgm.from_lg(x);
        CHECK(lgm.lg.degree(x) == g.degree(e.u) + g.degree(e.v) - 2);
      }
      int pairs_at_vertices = 0;
      for (Vertex v = 0; v < g.order(); ++v) pairs_at_vertices += g.degree(v) * (g.degree(v) - 1) / 2;
      CHECK(pairs_at_vertices == lgm.lg.size());
    }
  }

  TEST_CASE("precondition errors") {
    auto kind = [](const Graph& g) {
      try {
        (void)build_line_graph(g);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::lookup;
    };
    CHECK(kind(named("path", {2})) == ErrorKind::precondition);
    CHECK(kind(Graph(4, {{0, 1}, {2, 3}})) == ErrorKind::precondition);
    CHECK(line_graph_of(Graph(4, {{0, 1}, {2, 3}})).size() == 0);
  }

  TEST_CASE("canonical partition") {
    const auto p3 = build_line_graph(named("path", {3}));
    const auto cp3 = canonical_partition(p3);
    REQUIRE(cp3.cliques.size() == 1);
    CHECK(cp3.cliques[0].center == 1);
    CHECK(cp3.cliques[0].members.size() == 2);
    CHECK(cp3.clique_of_center[0] == -1);
    CHECK(p3.lg == named("path", {2}));

    const auto k4 = build_line_graph(named("complete", {4}));
    const auto cp = canonical_partition(k4);
    CHECK(cp.cliques.size() == 4);
    for (const auto& q : cp.cliques) CHECK(q.members.size() == 3);

    const auto c4 = build_line_graph(named("cycle", {4}));
    for (const auto& q : canonical_partition(c4).cliques) CHECK(q.members.size() == 2);
  }

  TEST_CASE("partition covers every line-graph edge exactly once") {
    for (const auto& g : connected_graphs(3, 6)) {
      const auto lgm = build_line_graph(g);
      const auto cp = canonical_partition(lgm);
      std::map<Edge, int> cover;
      for (const auto& q : cp.cliques) {
        CHECK(int(q.members.size()) == g.degree(q.center));
        for (std::size_t i = 0; i < q.members.size(); ++i)
          for (std::size_t j = i + 1; j < q.members.size(); ++j) {
            REQUIRE(lgm.lg.adjacent(q.members[i], q.members[j]));
            ++cover[Edge(q.members[i], q.members[j])];
          }
      }
      CHECK(int(cover.size()) == lgm.lg.size());
      for (const auto& [e, c] : cover) CHECK(c == 1);
      if (g.max_degree() <= 3)
        for (const auto& q : cp.cliques) CHECK((q.members.size() == 2 || q.members.size() == 3));
    }
  }

  TEST_CASE("clique of a line-graph edge") {
    const auto k4 = build_line_graph(named("complete", {4}));
    const auto cp = canonical_partition(k4);
    CHECK(clique_of_lg_edge(k4, cp, {k4.to_lg(0, 1), k4.to_lg(0, 2)}) == 0);
    CHECK(clique_of_lg_edge(k4, cp, {k4.to_lg(0, 1), k4.to_lg(1, 2)}) == 1);
    CHECK_THROWS_AS(clique_of_lg_edge(k4, cp, {k4.to_lg(0, 1), k4.to_lg(2, 3)}), Error);
    const auto c4 = build_line_graph(named("cycle", {4}));
    const auto cp4 = canonical_partition(c4);
    for (const Edge& e : c4.lg.edges()) {
      const Vertex v = clique_of_lg_edge(c4, cp4, e);
      CHECK(c4.from_lg(e.u).has(v));
      CHECK(c4.from_lg(e.v).has(v));
    }
  }

  TEST_CASE("non-isomorphic graphs give non-isomorphic line graphs") {
    const auto graphs = connected_graphs(3, 6);
    std::vector<Graph> lgs;
    for (const auto& g : graphs) lgs.push_back(line_graph_of(g));
    const Graph k3 = named("complete", {3}), claw = named("star", {3});
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        if (lgs[i].order() != lgs[j].order() || lgs[i].size() != lgs[j].size()) continue;
        const bool exception = (graphs[i] == canonical_form(k3) || graphs[i] == canonical_form(claw)) &&
                               (graphs[j] == canonical_form(k3) || graphs[j] == canonical_form(claw));
        if (!exception) CHECK_FALSE(are_isomorphic(lgs[i], lgs[j]));
      }
  }
}
