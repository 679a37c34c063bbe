#include "wdc/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wdc/planarity.hpp"

namespace wdc {

namespace {

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

// Oriented triangular faces of a plane triangulation.
struct Triangulation {
  std::vector<std::array<VertexId, 3>> faces;
  std::map<std::pair<VertexId, VertexId>, std::size_t> dart_face;
  Graph g;

  void index() {
    dart_face.clear();
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (int i = 0; i < 3; ++i) dart_face[{faces[f][i], faces[f][(i + 1) % 3]}] = f;
  }

  void split(std::size_t f, VertexId v) {
    auto [a, b, c] = faces[f];
    g.add_vertex(v);
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }

  // Replaces edge ab by xy inside the quadrilateral a y b x.
  bool flip(VertexId a, VertexId b) {
    std::size_t f1 = dart_face.at({a, b}), f2 = dart_face.at({b, a});
    auto third = [](const std::array<VertexId, 3>& t, VertexId p, VertexId q) {
      for (VertexId v : t)
        if (v != p && v != q) return v;
      return VertexId{0};
    };
    VertexId x = third(faces[f1], a, b), y = third(faces[f2], a, b);
    if (x == y || g.has_edge(x, y) || g.degree(a) <= 3 || g.degree(b) <= 3) return false;
    g = delete_edge(g, a, b);
    g.add_edge(x, y);
    faces[f1] = {x, a, y};
    faces[f2] = {y, b, x};
    index();
    return true;
  }
};

Triangulation make_triangulation(std::size_t n, std::mt19937_64& rng) {
  Triangulation t;
  t.g = Graph(3);
  t.g.add_edge(1, 2);
  t.g.add_edge(2, 3);
  t.g.add_edge(1, 3);
  t.faces = {{1, 2, 3}, {1, 3, 2}};
  for (VertexId v = 4; v <= n; ++v) t.split(draw(rng, t.faces.size()), v);
  t.index();
  if (n >= 5) {
    std::size_t flips = 2 * n;
    for (std::size_t i = 0; i < flips; ++i) {
      auto edges = t.g.edges();
      const Edge& e = edges[draw(rng, edges.size())];
      t.flip(e.first, e.second);
    }
  }
  return t;
}

bool is_bridge(const Graph& g, VertexId u, VertexId v) {
  Graph h = delete_edge(g, u, v);
  std::vector<VertexId> src{u};
  return bfs_distances(h, src).count(v) == 0;
}

}  // namespace

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("draw bound must be positive");
  return rng() % bound;
}

std::vector<std::string> named_graph_names() {
  return {"c5", "k4", "k4_subdivided", "k5", "k33", "cube", "fig7a", "fig7b"};
}

Graph named_graph(std::string_view name) {
  if (name == "c5") return cycle_graph(5);
  if (name == "k4") return complete_graph(4);
  if (name == "k5") return complete_graph(5);
  if (name == "k4_subdivided") {
    // Branch vertices 1..4; the subdivision vertex of edge ij comes next.
    Graph g(10);
    VertexId s = 5;
    for (VertexId i = 1; i <= 4; ++i)
      for (VertexId j = i + 1; j <= 4; ++j) {
        g.add_edge(i, s);
        g.add_edge(s, j);
        ++s;
      }
    return g;
  }
  if (name == "k33") {
    Graph g(6);
    for (VertexId i = 1; i <= 3; ++i)
      for (VertexId j = 4; j <= 6; ++j) g.add_edge(i, j);
    return g;
  }
  if (name == "cube") {
    // Vertex 1 + b for bit pattern b; edges flip one bit.
    Graph g(8);
    for (VertexId b = 0; b < 8; ++b)
      for (VertexId bit : {1u, 2u, 4u})
        if (!(b & bit)) g.add_edge(b + 1, (b | bit) + 1);
    return g;
  }
  if (name == "fig7a") {
    // A..F = 1..6.
    const Edge e[] = {{1, 2}, {3, 4}, {1, 5}, {5, 4}, {2, 6}, {6, 3}, {1, 4}, {2, 3}, {4, 6}, {5, 2}};
    return Graph::from_edges(6, e);
  }
  if (name == "fig7b") {
    // 7-cycle with chords 3-5, 5-7, 6-1.
    Graph g = cycle_graph(7);
    g.add_edge(3, 5);
    g.add_edge(5, 7);
    g.add_edge(6, 1);
    return g;
  }
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

Graph random_triangulation(std::size_t n, std::mt19937_64& rng) {
  if (n < 3) throw std::invalid_argument("a triangulation needs at least 3 vertices");
  return make_triangulation(n, rng).g;
}

Graph random_planar(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_planar needs n >= 1");
  std::mt19937_64 rng(seed);
  Graph g;
  if (n == 1) {
    g = Graph(1);
  } else if (n == 2) {
    g = Graph(2);
    g.add_edge(1, 2);
  } else {
    g = random_triangulation(n, rng);
    double d = std::clamp(density, 0.0, 1.0);
    std::size_t target = std::max<std::size_t>(n - 1, static_cast<std::size_t>(std::lround(d * (3.0 * n - 6))));
    auto edges = g.edges();
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[draw(rng, i)]);
    for (const Edge& e : edges) {
      if (g.size() <= target) break;
      if (!is_bridge(g, e.first, e.second)) g = delete_edge(g, e.first, e.second);
    }
  }
  if (!is_planar(g)) throw std::logic_error("random_planar produced a nonplanar graph");
  return g;
}

Graph random_cubic_planar(std::size_t faces, std::mt19937_64& rng) {
  if (faces < 4) throw std::invalid_argument("random_cubic_planar needs at least 4 faces");
  Triangulation t = make_triangulation(faces, rng);
  Graph d(t.faces.size());
  for (std::size_t f = 0; f < t.faces.size(); ++f)
    for (int i = 0; i < 3; ++i) {
      std::size_t other = t.dart_face.at({t.faces[f][(i + 1) % 3], t.faces[f][i]});
      if (other != f) d.add_edge(static_cast<VertexId>(f + 1), static_cast<VertexId>(other + 1));
    }
  return d;
}

Graph shuffle_ids(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexId> ids = g.vertices();
  std::vector<VertexId> perm = ids;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  std::map<VertexId, VertexId> m;
  for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = perm[i];
  Graph h;
  for (VertexId v : ids) h.add_vertex(m[v]);
  for (const auto& [u, v] : g.edges()) h.add_edge(m[u], m[v]);
  return h;
}

}  // namespace wdc
