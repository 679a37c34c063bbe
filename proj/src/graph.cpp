#include "wdc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace wdc {

Graph::Graph(std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) add_vertex(static_cast<VertexId>(i));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(VertexId v) {
  if (v == 0) throw GraphError("vertex id 0 is reserved");
  adj_.try_emplace(v);
  if (v >= next_id_) next_id_ = v + 1;
}

VertexId Graph::add_fresh_vertex() {
  VertexId v = next_id_;
  add_vertex(v);
  return v;
}

void Graph::require(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

void Graph::add_edge(VertexId u, VertexId v) {
  require(u);
  require(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edges_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw GraphError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (const auto& [u, nbrs] : adj_)
    for (VertexId v : nbrs)
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& [_, nbrs] : adj_) d = std::max(d, nbrs.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = SIZE_MAX;
  for (const auto& [_, nbrs] : adj_) d = std::min(d, nbrs.size());
  return d;
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

std::vector<VertexId> second_neighborhood(const Graph& g, VertexId v) {
  std::set<VertexId> out;
  for (VertexId w : g.neighbors(v))
    for (VertexId x : g.neighbors(w))
      if (x != v) out.insert(x);
  return {out.begin(), out.end()};
}

Graph delete_edge(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v))
    throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  Graph h;
  for (VertexId x : g.vertices()) h.add_vertex(x);
  for (auto [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
  h.reserve_ids(g.next_id());
  return h;
}

Graph delete_vertices(const Graph& g, std::span<const VertexId> vs) {
  std::set<VertexId> drop(vs.begin(), vs.end());
  for (VertexId v : drop)
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  Graph h;
  for (VertexId x : g.vertices())
    if (!drop.count(x)) h.add_vertex(x);
  for (auto [a, b] : g.edges())
    if (!drop.count(a) && !drop.count(b)) h.add_edge(a, b);
  h.reserve_ids(g.next_id());
  return h;
}

Graph delete_vertex(const Graph& g, VertexId v) {
  VertexId one[1] = {v};
  return delete_vertices(g, one);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
  std::set<VertexId> keep(vs.begin(), vs.end());
  Graph h;
  for (VertexId v : keep) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    h.add_vertex(v);
  }
  for (auto [a, b] : g.edges())
    if (keep.count(a) && keep.count(b)) h.add_edge(a, b);
  h.reserve_ids(g.next_id());
  return h;
}

std::pair<Graph, VertexId> identify_vertices(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw GraphError("cannot identify a vertex with itself");
  if (!g.has_vertex(u)) throw GraphError("unknown vertex " + std::to_string(u));
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  Graph h;
  for (VertexId x : g.vertices())
    if (x != u && x != v) h.add_vertex(x);
  h.reserve_ids(g.next_id());
  VertexId merged = h.add_fresh_vertex();
  auto image = [&](VertexId x) { return (x == u || x == v) ? merged : x; };
  for (auto [a, b] : g.edges()) {
    VertexId ia = image(a), ib = image(b);
    if (ia != ib) h.add_edge(ia, ib);
  }
  return {std::move(h), merged};
}

std::pair<Graph, VertexId> contract_edge(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v))
    throw GraphError("cannot contract non-edge " + std::to_string(u) + "-" + std::to_string(v));
  return identify_vertices(g, u, v);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen;
  for (VertexId s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> q{s};
    seen.insert(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x))
        if (seen.insert(y).second) q.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::map<VertexId, std::size_t> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::map<VertexId, std::size_t> dist;
  std::deque<VertexId> q;
  for (VertexId s : sources)
    if (dist.emplace(s, 0).second) q.push_back(s);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : g.neighbors(x))
      if (dist.emplace(y, dist[x] + 1).second) q.push_back(y);
  }
  return dist;
}

std::vector<VertexId> cycle_from_closed_walk(const Graph& g, std::span<const VertexId> walk) {
  std::vector<VertexId> w(walk.begin(), walk.end());
  if (w.size() >= 2 && w.front() == w.back()) w.pop_back();
  const std::size_t len = w.size();
  if (len < 3) throw GraphError("closed walk must have length at least 3");
  for (std::size_t i = 0; i < len; ++i) {
    VertexId a = w[i], b = w[(i + 1) % len], prev = w[(i + len - 1) % len];
    if (!g.has_edge(a, b))
      throw GraphError("walk step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    if (prev == b) throw GraphError("walk repeats an edge immediately at " + std::to_string(a));
  }
  // The shortest portion between two occurrences of a vertex contains no
  // further repetition, so it is already a cycle.
  std::size_t best_start = 0, best_len = len;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      if (w[i] != w[j]) continue;
      std::size_t inner = j - i, outer = len - inner;
      if (inner < best_len) best_len = inner, best_start = i;
      if (outer < best_len) best_len = outer, best_start = j;
    }
  std::vector<VertexId> cycle;
  for (std::size_t t = 0; t < best_len; ++t) cycle.push_back(w[(best_start + t) % len]);
  return cycle;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " edges:";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

}  // namespace wdc
