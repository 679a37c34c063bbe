#include "wdc/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wdc {

BlockKind classify_block(const Graph& b) {
  std::size_t n = b.order(), m = b.size();
  if (m == n * (n - 1) / 2) return BlockKind::complete;
  if (m == n && n % 2 == 1 && b.max_degree() == 2 && b.min_degree() == 2) return BlockKind::odd_cycle;
  return BlockKind::other;
}

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::complete: return "complete";
    case BlockKind::odd_cycle: return "odd-cycle";
    default: return "other";
  }
}

BlockDecomposition blocks(const Graph& g) {
  BlockDecomposition out;
  std::map<VertexId, std::size_t> disc, low;
  std::set<VertexId> cuts;
  std::vector<Edge> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    VertexId v, parent;
    std::size_t next;
    std::size_t children;
  };

  for (VertexId root : g.vertices()) {
    if (disc.count(root)) continue;
    std::vector<Frame> st{{root, 0, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        VertexId w = nb[f.next++];
        if (!disc.count(w)) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          ++f.children;
          st.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      st.pop_back();
      if (st.empty()) {
        if (done.children >= 2) cuts.insert(done.v);
        continue;
      }
      VertexId u = st.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        if (st.size() >= 2) cuts.insert(u);
        Block b;
        std::set<VertexId> vs;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
          vs.insert(e.first);
          vs.insert(e.second);
          if (e.first == u && e.second == done.v) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.vertices.assign(vs.begin(), vs.end());
        Graph bg;
        for (VertexId x : b.vertices) bg.add_vertex(x);
        for (auto [x, y] : b.edges) bg.add_edge(x, y);
        b.kind = classify_block(bg);
        out.blocks.push_back(std::move(b));
      }
    }
  }
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

}  // namespace wdc
