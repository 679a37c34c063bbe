#include "wdc/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <set>

namespace wdc {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

// Turn the edges of an exact Kuratowski subdivision into a minor model on g.
void minor_from_subdivision(const std::vector<Edge>& kedges, PlanarityCertificate& cert) {
  std::map<VertexId, std::vector<VertexId>> k;
  for (auto [u, v] : kedges) {
    k[u].push_back(v);
    k[v].push_back(u);
  }
  std::vector<VertexId> branch;
  for (auto& [v, nb] : k)
    if (nb.size() >= 3) branch.push_back(v);
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = i;

  cert.branch_sets.assign(branch.size(), {});
  for (std::size_t i = 0; i < branch.size(); ++i) cert.branch_sets[i].push_back(branch[i]);
  std::vector<std::set<std::size_t>> joined(branch.size());

  // Walk every subdivided path once, starting from its lower-index end.
  for (std::size_t i = 0; i < branch.size(); ++i) {
    for (VertexId first : k[branch[i]]) {
      VertexId prev = branch[i], cur = first;
      std::vector<VertexId> interior;
      while (!index.count(cur)) {
        interior.push_back(cur);
        const auto& nb = k[cur];
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      std::size_t j = index[cur];
      joined[i].insert(j);
      if (i < j)
        for (VertexId x : interior) cert.branch_sets[i].push_back(x);
    }
  }
  if (branch.size() == 5) {
    cert.minor = MinorKind::k5;
  } else {
    cert.minor = MinorKind::k33;
    // Two-color the branch vertices along the paths.
    std::vector<int> side(branch.size(), -1);
    side[0] = 0;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b : joined[a])
        if (side[b] < 0) side[b] = 1 - side[a], stack.push_back(b);
    }
    std::vector<std::vector<VertexId>> ordered;
    for (int s = 0; s < 2; ++s)
      for (std::size_t i = 0; i < branch.size(); ++i)
        if (side[i] == s) ordered.push_back(cert.branch_sets[i]);
    cert.branch_sets = std::move(ordered);
  }
  for (auto& s : cert.branch_sets) std::sort(s.begin(), s.end());
}

bool edges_planar(const std::vector<Edge>& edges) {
  std::map<VertexId, int> idx;
  for (auto [u, v] : edges) {
    idx.emplace(u, static_cast<int>(idx.size()));
    idx.emplace(v, static_cast<int>(idx.size()));
  }
  BGraph bg(idx.size());
  for (auto [u, v] : edges) boost::add_edge(idx[u], idx[v], bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Edge-minimal nonplanar subgraph, which is a subdivision of K5 or K3,3.
std::vector<Edge> minimal_nonplanar(std::vector<Edge> edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    Edge e = edges[i];
    edges.erase(edges.begin() + static_cast<long>(i));
    if (edges_planar(edges)) edges.insert(edges.begin() + static_cast<long>(i), e);
  }
  return edges;
}

}  // namespace

PlanarityCertificate is_planar(const Graph& g) {
  PlanarityCertificate cert;
  std::vector<VertexId> ids = g.vertices();
  std::map<VertexId, int> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);

  BGraph bg(ids.size());
  for (auto [u, v] : g.edges()) boost::add_edge(idx[u], idx[v], bg);
  auto eidx = boost::get(boost::edge_index, bg);
  int count = 0;
  boost::graph_traits<BGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(eidx, *ei, count++);

  std::vector<std::vector<BEdge>> embedding(ids.size());
  std::vector<BEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &embedding[0],
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  cert.planar = planar;
  if (planar) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto& rot = cert.rotation[ids[i]];
      for (const BEdge& e : embedding[i]) {
        auto s = boost::source(e, bg), t = boost::target(e, bg);
        rot.push_back(ids[static_cast<std::size_t>(s) == i ? t : s]);
      }
    }
    if (!check_embedding(g, cert.rotation, &cert.faces))
      throw GraphError("planar embedding failed the Euler check");
  } else {
    std::set<Edge> reported;
    for (const BEdge& e : kuratowski) {
      VertexId a = ids[boost::source(e, bg)], b = ids[boost::target(e, bg)];
      reported.insert({std::min(a, b), std::max(a, b)});
    }
    // The reported subgraph is not always exact; shrink it (or the whole
    // graph when it is planar) to an edge-minimal witness.
    std::vector<Edge> start(reported.begin(), reported.end());
    if (edges_planar(start)) start = g.edges();
    minor_from_subdivision(minimal_nonplanar(std::move(start)), cert);
    if (!check_minor_model(g, cert.minor, cert.branch_sets))
      throw GraphError("Kuratowski witness failed the minor-model check");
  }
  return cert;
}

bool check_embedding(const Graph& g, const std::map<VertexId, std::vector<VertexId>>& rotation,
                     std::size_t* faces_out) {
  // Rotation must list exactly the neighbors of each vertex.
  for (VertexId v : g.vertices()) {
    auto it = rotation.find(v);
    std::vector<VertexId> rot = it == rotation.end() ? std::vector<VertexId>{} : it->second;
    std::sort(rot.begin(), rot.end());
    if (rot != g.neighbors(v)) return false;
  }
  std::map<VertexId, std::map<VertexId, std::size_t>> pos;
  for (const auto& [v, rot] : rotation)
    for (std::size_t i = 0; i < rot.size(); ++i) pos[v][rot[i]] = i;

  std::size_t total_faces = 0;
  for (const auto& comp : connected_components(g)) {
    std::size_t edges = 0;
    for (VertexId v : comp) edges += g.degree(v);
    edges /= 2;
    std::size_t faces = 0;
    if (edges == 0) {
      faces = 1;
    } else {
      std::set<Edge> used;
      for (VertexId u : comp)
        for (VertexId v : g.neighbors(u)) {
          if (used.count({u, v})) continue;
          ++faces;
          VertexId a = u, b = v;
          while (used.insert({a, b}).second) {
            const auto& rot = rotation.at(b);
            VertexId c = rot[(pos[b][a] + 1) % rot.size()];
            a = b;
            b = c;
          }
        }
    }
    long long euler = static_cast<long long>(comp.size()) - static_cast<long long>(edges) +
                      static_cast<long long>(faces);
    if (euler != 2) return false;
    total_faces += faces;
  }
  if (faces_out) *faces_out = total_faces;
  return true;
}

bool check_minor_model(const Graph& g, MinorKind kind,
                       const std::vector<std::vector<VertexId>>& sets) {
  std::size_t want = kind == MinorKind::k5 ? 5 : kind == MinorKind::k33 ? 6 : 0;
  if (want == 0 || sets.size() != want) return false;
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (VertexId v : sets[i]) {
      if (!g.has_vertex(v) || !owner.emplace(v, i).second) return false;
    }
    Graph sub = induced_subgraph(g, sets[i]);
    if (!is_connected(sub)) return false;
  }
  std::set<std::pair<std::size_t, std::size_t>> touching;
  for (auto [u, v] : g.edges()) {
    auto a = owner.find(u), b = owner.find(v);
    if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
    touching.insert({std::min(a->second, b->second), std::max(a->second, b->second)});
  }
  for (std::size_t i = 0; i < want; ++i)
    for (std::size_t j = i + 1; j < want; ++j) {
      bool needed = kind == MinorKind::k5 || ((i < 3) != (j < 3));
      if (needed && !touching.count({i, j})) return false;
    }
  return true;
}

}  // namespace wdc
