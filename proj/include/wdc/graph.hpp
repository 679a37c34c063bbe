#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdc {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph keyed by stable vertex ids. Adjacency lists are
// kept sorted. Derived graphs inherit next_id() so ids handed out by
// contraction or identification are never reused along a derivation chain.
class Graph {
 public:
  Graph() = default;
  // Vertices 1..n, no edges.
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  void add_vertex(VertexId v);
  VertexId add_fresh_vertex();
  // Adds uv; an existing edge is left alone. Throws on loops or unknown ends.
  void add_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_; }
  bool empty() const { return adj_.empty(); }

  std::vector<VertexId> vertices() const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::vector<Edge> edges() const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  VertexId next_id() const { return next_id_; }
  void reserve_ids(VertexId next) {
    if (next > next_id_) next_id_ = next;
  }

  const std::map<VertexId, std::vector<VertexId>>& adjacency() const { return adj_; }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void require(VertexId v) const;

  std::map<VertexId, std::vector<VertexId>> adj_;
  std::size_t edges_ = 0;
  VertexId next_id_ = 1;
};

std::size_t degree(const Graph& g, VertexId v);
// Vertices sharing at least one neighbor with v (v itself excluded).
std::vector<VertexId> second_neighborhood(const Graph& g, VertexId v);

Graph delete_edge(const Graph& g, VertexId u, VertexId v);
Graph delete_vertex(const Graph& g, VertexId v);
Graph delete_vertices(const Graph& g, std::span<const VertexId> vs);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs);

// Merge u and v into a fresh vertex adjacent to N(u) ∪ N(v) − {u, v}.
std::pair<Graph, VertexId> contract_edge(const Graph& g, VertexId u, VertexId v);
std::pair<Graph, VertexId> identify_vertices(const Graph& g, VertexId u, VertexId v);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// BFS distances from a source set; unreachable vertices are absent.
std::map<VertexId, std::size_t> bfs_distances(const Graph& g, std::span<const VertexId> sources);

// Simple cycle whose edges all lie on the closed walk (first vertex not
// repeated at the end). Consecutive walk vertices must be adjacent and the
// walk may not turn straight back along the edge it arrived on.
std::vector<VertexId> cycle_from_closed_walk(const Graph& g, std::span<const VertexId> walk);

std::string describe(const Graph& g);

}  // namespace wdc
