#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "graph_enum.hpp"
#include "oracles.hpp"
#include "wdc/exact.hpp"
#include "wdc/generators.hpp"
#include "wdc/pipeline.hpp"
#include "wdc/planarity.hpp"
#include "wdc/verify.hpp"

using namespace wdc;
using namespace wdc::testing;

namespace {

Graph edge_list(std::initializer_list<Edge> edges) {
  Graph g;
  for (auto [u, v] : edges) {
    if (!g.has_vertex(u)) g.add_vertex(u);
    if (!g.has_vertex(v)) g.add_vertex(v);
    g.add_edge(u, v);
  }
  return g;
}

// Tries all six labelings of the neighbors.
bool special_by_labeling(const Graph& g, VertexId v) {
  if (g.degree(v) != 3) return false;
  auto nb = g.neighbors(v);
  std::array<VertexId, 3> u{nb[0], nb[1], nb[2]};
  std::sort(u.begin(), u.end());
  auto heavy = [&](VertexId x) {
    std::size_t n = 0;
    for (VertexId y : g.neighbors(x)) n += g.degree(y) >= 4;
    return n;
  };
  do {
    bool ok = g.degree(u[0]) == 3 && g.degree(u[1]) == 3 && heavy(u[0]) == 2 && heavy(u[1]) == 2;
    for (VertexId y : g.neighbors(u[2])) ok = ok && g.degree(y) == 3;
    if (ok) return true;
  } while (std::next_permutation(u.begin(), u.end()));
  return false;
}

// The two-vertex gadget: 1 has degree 3 with 2 and 3 hanging on the 4-vertices
// 5 and 6, and 4 has only 3-vertices around it.
Graph special_gadget() {
  return edge_list({{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8},
                    {4, 9}, {4, 10}, {9, 10}, {9, 7}, {10, 8}});
}

// Proper colorings of g from {1..colors}, at most `limit` of them.
void for_each_proper(const Graph& g, int colors, std::size_t limit, const std::function<void(const Coloring&)>& visit) {
  auto vs = g.vertices();
  std::vector<VertexId> order(vs.begin(), vs.end());
  Coloring c;
  std::size_t found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (found >= limit) return;
    if (i == order.size()) {
      ++found;
      visit(c);
      return;
    }
    for (Color col = 1; col <= colors; ++col) {
      bool ok = true;
      for (VertexId u : g.neighbors(order[i])) ok = ok && !(c.has(u) && c.at(u) == col);
      if (!ok) continue;
      c.set(order[i], col);
      go(i + 1);
      c.erase(order[i]);
    }
  };
  go(0);
}

std::vector<Graph> reduction_free_bases(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int t = 0; t < 5000 && out.size() < count; ++t) {
    Graph g = random_planar(8 + t % 30, 0.3 + 0.1 * (t % 7), rng());
    Graph base = reduce_fully(g).graphs.back();
    if (base.size() > 0) out.push_back(base);
  }
  return out;
}

void check_pipeline_result(const Graph& g, const PipelineResult& r) {
  CHECK(r.h.covers_a4_edges);
  CHECK(is_planar(r.h.h).planar);
  CHECK(naive_proper(r.h.h, r.ch));
  CHECK(r.ch.palette_size() <= 4);
  CHECK(r.coloring.is_total_on(g));
  CHECK(r.coloring.palette_size() <= 6);
  CHECK(naive_proper(r.gprime, r.coloring));
  CHECK(naive_weak_dynamic(g, r.coloring, 3));
  for (VertexId v : r.cls.a4) CHECK(r.coloring.at(v) == r.ch.at(v));
}

}  // namespace

TEST_CASE("classification examples") {
  Graph cube = named_graph("cube");
  auto cc = classify(cube);
  CHECK(cc.a4.empty());
  CHECK(cc.a3star.empty());
  for (VertexId v : cube.vertices()) CHECK(cc.nstar.at(v).size() == 3);

  auto star = classify(star_graph(5));
  CHECK(star.a4 == std::set<VertexId>{1});
  CHECK(star.nstar.at(1) == std::vector<VertexId>{2, 3, 4});
  CHECK(star.nstar.at(2) == std::vector<VertexId>{1});

  Graph gadget = special_gadget();
  CHECK(is_a3star(gadget, 1));
  CHECK(classify(gadget).a3star.count(1) == 1);
  CHECK_FALSE(is_a3star(gadget, 2));
}

TEST_CASE("special 3-vertices match a labeling search") {
  std::mt19937_64 rng(31);
  std::size_t hits = 0, misses = 0;
  // The gadget, each single-edge deletion of it and each single-edge
  // addition, then random planar graphs.
  Graph gadget = special_gadget();
  std::vector<Graph> graphs{gadget};
  for (auto [u, v] : gadget.edges()) graphs.push_back(delete_edge(gadget, u, v));
  for (VertexId u : gadget.vertices())
    for (VertexId v : gadget.vertices())
      if (u < v && !gadget.has_edge(u, v)) {
        Graph g = gadget;
        g.add_edge(u, v);
        graphs.push_back(g);
      }
  for (int t = 0; t < 400; ++t) graphs.push_back(random_planar(6 + t % 20, 0.2 + 0.1 * (t % 5), rng()));
  for (const Graph& g : graphs) {
    for (VertexId v : g.vertices()) {
      bool want = special_by_labeling(g, v);
      CHECK(is_a3star(g, v) == want);
      hits += want;
      misses += !want && g.degree(v) == 3;
    }
  }
  CHECK(hits > 1);
  CHECK(misses > 10);
}

TEST_CASE("N* picks an optimal neighbor subset") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_planar(6 + t % 15, 0.3 + 0.1 * (t % 6), rng());
    auto cls = classify(g);
    for (VertexId w : g.vertices()) {
      auto nb = g.neighbors(w);
      std::vector<VertexId> sorted(nb.begin(), nb.end());
      std::sort(sorted.begin(), sorted.end());
      std::size_t size = std::min<std::size_t>(sorted.size(), 3);
      // (special count, -induced edges, set) minimized over all subsets.
      std::tuple<std::size_t, long, std::vector<VertexId>> best{99, 0, {}};
      for (const auto& pick : subsets_of_size(static_cast<int>(sorted.size()), size)) {
        std::vector<VertexId> s;
        for (Color i : pick) s.push_back(sorted[i - 1]);
        std::size_t special = 0;
        long edges = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          special += cls.a3star.count(s[i]);
          for (std::size_t j = i + 1; j < s.size(); ++j) edges += g.has_edge(s[i], s[j]);
        }
        best = std::min(best, std::tuple{special, -edges, s});
      }
      CHECK(cls.nstar.at(w) == std::get<2>(best));
    }
  }
}

TEST_CASE("G' examples") {
  Graph k13 = star_graph(3);
  Graph gp = build_gprime(k13, classify(k13));
  CHECK(gp.order() == 4);
  CHECK(gp.size() == 3);
  CHECK(gp.has_edge(2, 3));
  CHECK(gp.has_edge(3, 4));
  CHECK(gp.has_edge(2, 4));
  CHECK(gp.degree(1) == 0);

  // Distance-two graph of C5 is again a 5-cycle.
  Graph c5 = cycle_graph(5);
  Graph c5p = build_gprime(c5, classify(c5));
  CHECK(c5p.size() == 5);
  CHECK(c5p.has_edge(1, 3));
  CHECK(c5p.has_edge(2, 5));
  CHECK_FALSE(c5p.has_edge(1, 2));

  Graph p3 = path_graph(3);
  Graph p3p = build_gprime(p3, classify(p3));
  CHECK(p3p.size() == 1);
  CHECK(p3p.has_edge(1, 3));
}

TEST_CASE("every proper G' coloring is 3-weak-dynamic on g") {
  std::size_t graphs = 0, colorings = 0;
  for (const Graph& g : connected_graphs_up_to(7)) {
    Graph gp = build_gprime(g, classify(g));
    auto chi = naive_chromatic_number(gp, 7);
    REQUIRE(chi);
    ++graphs;
    for (int colors = *chi; colors <= std::min(*chi + 1, 7); ++colors)
      for_each_proper(gp, colors, 60, [&](const Coloring& c) {
        ++colorings;
        CHECK(naive_weak_dynamic(g, c, 3));
      });
  }
  CHECK(graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853);
  CHECK(colorings > graphs);
}

TEST_CASE("H examples") {
  Graph cube = named_graph("cube");
  auto cc = classify(cube);
  auto h = build_h(cube, build_gprime(cube, cc), cc);
  CHECK(h.h.order() == 0);
  CHECK(h.covers_a4_edges);

  Graph k15 = star_graph(5);
  auto ks = classify(k15);
  auto hs = build_h(k15, build_gprime(k15, ks), ks);
  CHECK(hs.h.order() == 1);
  CHECK(hs.h.size() == 0);

  // Two 4-vertices sharing a 2-vertex become adjacent.
  Graph two = edge_list({{1, 3}, {2, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {2, 9}});
  auto tc = classify(two);
  auto ht = build_h(two, build_gprime(two, tc), tc);
  CHECK(ht.h.order() == 2);
  CHECK(ht.h.has_edge(1, 2));
}

TEST_CASE("four-coloring H") {
  CHECK(four_color_h(Graph()).size() == 0);
  Coloring k4 = four_color_h(complete_graph(4));
  CHECK(naive_proper(complete_graph(4), k4));
  CHECK(k4.distinct_colors() == 4);
  CHECK_THROWS_AS(four_color_h(complete_graph(5)), PipelineInvariantError);
}

TEST_CASE("assembling small graphs") {
  for (const Graph& g : {star_graph(3), cycle_graph(5), complete_bipartite(2, 4)}) {
    auto cls = classify(g);
    Graph gp = build_gprime(g, cls);
    auto h = build_h(g, gp, cls);
    Coloring ch = four_color_h(h.h);
    Coloring c = assemble_and_color(g, gp, cls, ch);
    CHECK(naive_weak_dynamic(g, c, 3));
    CHECK(c.palette_size() <= 6);
  }
}

TEST_CASE("pipeline on reduction-free graphs") {
  Graph k24 = complete_bipartite(2, 4);
  REQUIRE_FALSE(detect_configuration(k24).has_value());
  check_pipeline_result(k24, run_pipeline(k24));

  auto bases = reduction_free_bases(40, 17);
  REQUIRE(bases.size() >= 20);
  for (const Graph& g : bases) {
    CHECK_FALSE(detect_configuration(g).has_value());
    check_pipeline_result(g, run_pipeline(g));
  }
}

TEST_CASE("planar driver") {
  Coloring c5 = wd3_color_planar(cycle_graph(5));
  CHECK(naive_weak_dynamic(cycle_graph(5), c5, 3));
  CHECK(c5.palette_size() <= 6);

  for (const char* name : {"fig7a", "fig7b", "cube", "k4_subdivided"}) {
    CAPTURE(name);
    Graph g = named_graph(name);
    Coloring c = wd3_color_planar(g);
    CHECK(naive_weak_dynamic(g, c, 3));
    CHECK(c.palette_size() <= 6);
  }

  CHECK_THROWS_AS(wd3_color_planar(named_graph("k5")), NonPlanarInput);
  CHECK_THROWS_AS(wd3_color_planar(named_graph("k33")), NonPlanarInput);

  // C5 on 1..5, a lone edge 6-7 and an isolated vertex 8.
  Graph mixed = cycle_graph(5);
  mixed.add_vertex(6);
  mixed.add_vertex(7);
  mixed.add_vertex(8);
  mixed.add_edge(6, 7);
  Coloring m = wd3_color_planar(mixed);
  CHECK(naive_weak_dynamic(mixed, m, 3));
  CHECK(m.at(8) == 1);
  CHECK(wd3_color_planar(Graph()).size() == 0);
}

TEST_CASE("planar driver on random graphs") {
  std::mt19937_64 rng(99);
  std::size_t fallbacks = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = random_planar(2 + t % 40, 0.1 + 0.1 * (t % 9), rng());
    ColoringRun run = wd3_color_planar_detailed(g);
    CHECK(run.coloring.is_total_on(g));
    CHECK(run.coloring.palette_size() <= 6);
    CHECK(naive_weak_dynamic(g, run.coloring, 3));
    for (const Graph& h : run.h_graphs) CHECK(chromatic_number_exact(h, 4).feasible());
    CHECK(wd3_color_planar(g) == run.coloring);
    fallbacks += run.fallbacks.size();
  }
  CHECK(fallbacks == 0);
}
