#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graph_enum.hpp"
#include "wdc/blocks.hpp"
#include "wdc/graph.hpp"
#include "wdc/graph_io.hpp"

using namespace wdc;
using namespace wdc::testing;

namespace {

std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

bool is_simple_cycle(const Graph& g, const std::vector<VertexId>& cyc) {
  if (cyc.size() < 3) return false;
  std::set<VertexId> distinct(cyc.begin(), cyc.end());
  if (distinct.size() != cyc.size()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

}  // namespace

TEST_CASE("degree on small graphs") {
  Graph k4 = complete_graph(4);
  for (VertexId v : k4.vertices()) CHECK(degree(k4, v) == 3);
  Graph c5 = cycle_graph(5);
  for (VertexId v : c5.vertices()) CHECK(degree(c5, v) == 2);
  CHECK(degree(Graph(1), 1) == 0);
  CHECK_THROWS_AS(degree(k4, 9), GraphError);
}

TEST_CASE("second neighborhood") {
  Graph p3 = path_graph(3);
  CHECK(second_neighborhood(p3, 1) == std::vector<VertexId>{3});
  CHECK(second_neighborhood(complete_graph(4), 1) == std::vector<VertexId>{2, 3, 4});
  CHECK(second_neighborhood(star_graph(3), 2) == std::vector<VertexId>{3, 4});
  CHECK_THROWS_AS(second_neighborhood(p3, 7), GraphError);
}

TEST_CASE("second neighborhood matches a common-neighbor scan") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, 8, 0.35);
    for (VertexId v : g.vertices()) {
      std::vector<VertexId> want;
      for (VertexId x : g.vertices()) {
        if (x == v) continue;
        bool common = false;
        for (VertexId y : g.vertices())
          if (g.has_edge(v, y) && g.has_edge(x, y)) common = true;
        if (common) want.push_back(x);
      }
      CHECK(second_neighborhood(g, v) == want);
    }
  }
}

TEST_CASE("deletion and induced subgraphs keep ids") {
  Graph t = delete_edge(complete_graph(3), 1, 2);
  CHECK(t.size() == 2);
  CHECK(t.has_edge(1, 3));
  CHECK(t.has_edge(2, 3));

  Graph k3 = delete_vertex(complete_graph(4), 2);
  CHECK(k3.vertices() == std::vector<VertexId>{1, 3, 4});
  CHECK(k3.size() == 3);

  std::vector<VertexId> keep{2, 3, 4};
  Graph p = induced_subgraph(cycle_graph(5), keep);
  CHECK(p.size() == 2);
  CHECK(p.has_edge(2, 3));
  CHECK(p.has_edge(3, 4));

  CHECK_THROWS_AS(delete_edge(path_graph(3), 1, 3), GraphError);
  CHECK_THROWS_AS(delete_vertex(path_graph(3), 4), GraphError);
}

TEST_CASE("contraction") {
  auto [k2, f] = contract_edge(complete_graph(3), 1, 2);
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(f == 4);

  auto [tri, f4] = contract_edge(cycle_graph(4), 1, 2);
  CHECK(tri.order() == 3);
  CHECK(tri.size() == 3);
  CHECK(tri.has_edge(f4, 3));
  CHECK(tri.has_edge(f4, 4));

  auto [k3, fk] = contract_edge(complete_graph(4), 1, 2);
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3.has_edge(fk, 3));

  CHECK_THROWS_AS(contract_edge(path_graph(3), 1, 3), GraphError);
}

TEST_CASE("fresh ids are never reused along a derivation chain") {
  Graph g = cycle_graph(6);
  std::set<VertexId> handed_out;
  for (int i = 0; i < 3; ++i) {
    auto e = g.edges().front();
    auto [h, f] = contract_edge(g, e.first, e.second);
    CHECK(handed_out.insert(f).second);
    CHECK(f > 6);
    g = h;
  }
}

TEST_CASE("identification") {
  auto [k2, f] = identify_vertices(path_graph(3), 1, 3);
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(f, 2));

  auto [k12, g] = identify_vertices(cycle_graph(4), 1, 3);
  CHECK(k12.order() == 3);
  CHECK(k12.size() == 2);
  CHECK(k12.degree(g) == 2);

  auto [single, s] = identify_vertices(Graph(2), 1, 2);
  CHECK(single.order() == 1);
  CHECK(single.degree(s) == 0);

  CHECK_THROWS_AS(identify_vertices(path_graph(3), 2, 2), GraphError);
}

TEST_CASE("contraction degree equals |N(u) ∪ N(v)| - 2 on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(rng, 3 + t % 8, 0.4);
    for (auto [u, v] : g.edges()) {
      std::set<VertexId> uni(g.neighbors(u).begin(), g.neighbors(u).end());
      uni.insert(g.neighbors(v).begin(), g.neighbors(v).end());
      auto [h, f] = contract_edge(g, u, v);
      CHECK(h.degree(f) == uni.size() - 2);
      for (VertexId x : h.vertices())
        for (VertexId y : h.neighbors(x)) CHECK(h.has_edge(y, x));
    }
  }
}

TEST_CASE("cycle from closed walk") {
  Graph c5 = cycle_graph(5);
  std::vector<VertexId> around{1, 2, 3, 4, 5};
  auto cyc = cycle_from_closed_walk(c5, around);
  CHECK(cyc.size() == 5);
  CHECK(is_simple_cycle(c5, cyc));

  Graph k3 = complete_graph(3);
  std::vector<VertexId> tri{1, 2, 3};
  CHECK(cycle_from_closed_walk(k3, tri).size() == 3);

  // Two triangles through cut vertex 1.
  Graph bow(5);
  for (auto [u, v] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}}) bow.add_edge(u, v);
  std::vector<VertexId> eight{1, 2, 3, 1, 4, 5};
  auto part = cycle_from_closed_walk(bow, eight);
  CHECK(part.size() == 3);
  CHECK(is_simple_cycle(bow, part));

  std::vector<VertexId> back{1, 2, 1};
  CHECK_THROWS(cycle_from_closed_walk(k3, back));
  std::vector<VertexId> gap{1, 3, 5};
  CHECK_THROWS(cycle_from_closed_walk(c5, gap));
}

TEST_CASE("cycle from closed walk: random non-backtracking walks") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    Graph g = random_connected_graph(rng, 7, 0.35);
    if (g.min_degree() < 2) continue;
    // Walk without immediate reversal until it can close at vertex 1.
    std::vector<VertexId> walk{1};
    VertexId prev = 0;
    bool closed = false;
    for (int step = 0; step < 60 && !closed; ++step) {
      VertexId cur = walk.back();
      std::vector<VertexId> options;
      for (VertexId x : g.neighbors(cur))
        if (x != prev) options.push_back(x);
      VertexId next = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      if (next == 1 && walk.size() >= 3 && walk[1] != cur) {
        closed = true;
      } else {
        prev = cur;
        walk.push_back(next);
      }
    }
    if (!closed) continue;
    std::set<Edge> walk_edges;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      VertexId a = walk[i], b = walk[(i + 1) % walk.size()];
      walk_edges.insert({std::min(a, b), std::max(a, b)});
    }
    auto cyc = cycle_from_closed_walk(g, walk);
    CHECK(is_simple_cycle(g, cyc));
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      CHECK(walk_edges.count({std::min(a, b), std::max(a, b)}));
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("blocks") {
  Graph bow(5);
  for (auto [u, v] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}}) bow.add_edge(u, v);
  auto d = blocks(bow);
  CHECK(d.blocks.size() == 2);
  CHECK(d.cut_vertices == std::vector<VertexId>{1});
  for (const auto& b : d.blocks) CHECK(b.kind == BlockKind::complete);

  auto c6 = blocks(cycle_graph(6));
  REQUIRE(c6.blocks.size() == 1);
  CHECK(c6.blocks[0].kind == BlockKind::other);
  CHECK(blocks(cycle_graph(5)).blocks[0].kind == BlockKind::odd_cycle);

  auto p4 = blocks(path_graph(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices == std::vector<VertexId>{2, 3});
}

TEST_CASE("blocks partition the edge set") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(rng, 4 + t % 7, 0.3);
    auto d = blocks(g);
    std::multiset<Edge> seen;
    for (const auto& b : d.blocks) {
      seen.insert(b.edges.begin(), b.edges.end());
      for (const auto& o : d.blocks) {
        if (&o == &b) continue;
        std::vector<VertexId> shared;
        std::set_intersection(b.vertices.begin(), b.vertices.end(), o.vertices.begin(), o.vertices.end(),
                              std::back_inserter(shared));
        CHECK(shared.size() <= 1);
        if (shared.size() == 1)
          CHECK(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), shared[0]));
      }
    }
    std::set<Edge> distinct(seen.begin(), seen.end());
    CHECK(distinct.size() == seen.size());
    CHECK(distinct == edge_set(g));
  }
}

TEST_CASE("graph enumeration matches known counts") {
  // Unlabeled graphs and connected graphs on n vertices.
  const std::size_t all[] = {1, 2, 4, 11, 34, 156};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(all_graphs(n).size() == all[n - 1]);
    CHECK(connected_graphs(n).size() == connected[n - 1]);
  }
}

TEST_CASE("DIMACS and JSON parsing") {
  Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  Graph j = parse_graph(R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
  CHECK(j == g);
  CHECK(parse_graph(to_dimacs(cycle_graph(5))) == cycle_graph(5));

  try {
    parse_graph("p edge 3 2\ne 1 2\ne 2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 5]]})"), ParseError);
}
