#include "wdc/list_coloring.hpp"

#include <algorithm>
#include <set>

#include "wdc/blocks.hpp"
#include "wdc/verify.hpp"

namespace wdc {

namespace {

void require_degree_lists(const Graph& g, const ListAssignment& lists) {
  for (VertexId v : g.vertices()) {
    if (!lists.has(v)) throw PreconditionError("missing list for vertex " + std::to_string(v));
    if (lists.size(v) < g.degree(v))
      throw PreconditionError("list of vertex " + std::to_string(v) + " is shorter than its degree");
  }
}

std::optional<VertexId> find_slack(const Graph& g, const ListAssignment& lists) {
  for (VertexId v : g.vertices())
    if (lists.size(v) > g.degree(v)) return v;
  return std::nullopt;
}

// Smallest listed color unused on the colored neighbors, for each vertex in turn.
void color_in_order(const Graph& g, const ListAssignment& lists, const std::vector<VertexId>& order,
                    Coloring& c) {
  for (VertexId v : order) {
    std::set<Color> used = colors_of(c, g.neighbors(v));
    bool done = false;
    for (Color col : lists.list(v))
      if (!used.count(col)) {
        c.set(v, col);
        done = true;
        break;
      }
    if (!done) throw ListColoringError("no free color left for vertex " + std::to_string(v));
  }
}

// Farther vertices first; ties by id.
std::vector<VertexId> order_by_distance(const Graph& g, std::span<const VertexId> sources,
                                        const std::set<VertexId>& skip) {
  auto dist = bfs_distances(g, sources);
  std::vector<VertexId> order;
  for (VertexId v : g.vertices())
    if (!skip.count(v)) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return dist.at(a) > dist.at(b); });
  return order;
}

void check_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c) {
  for (VertexId v : g.vertices()) {
    if (!c.has(v)) throw ListColoringError("vertex " + std::to_string(v) + " left uncolored");
    if (!lists.contains(v, c.at(v)))
      throw ListColoringError("vertex " + std::to_string(v) + " colored outside its list");
  }
  for (auto [u, v] : g.edges())
    if (c.at(u) == c.at(v))
      throw ListColoringError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
}

std::optional<Edge> differing_edge(const Graph& g, const ListAssignment& lists) {
  for (auto [u, v] : g.edges())
    if (lists.list(u) != lists.list(v)) return Edge{u, v};
  return std::nullopt;
}

// Lists of the vertices of `part` minus the colors fixed on their g-neighbors.
ListAssignment without_colors(const Graph& g, const Graph& part, const ListAssignment& lists,
                              const Coloring& fixed) {
  ListAssignment out;
  for (VertexId v : part.vertices()) {
    std::set<Color> used = colors_of(fixed, g.neighbors(v));
    std::vector<Color> keep;
    for (Color c : lists.list(v))
      if (!used.count(c)) keep.push_back(c);
    out.set(v, std::move(keep));
  }
  return out;
}

// Cycle order starting at `first`, ending at its neighbor `last`.
std::vector<VertexId> cycle_order(const Graph& cyc, VertexId first, VertexId last) {
  std::vector<VertexId> order{first};
  VertexId prev = last, cur = first;
  while (order.size() < cyc.order()) {
    const auto& nb = cyc.neighbors(cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Regular 2-connected graph, not complete, not an odd cycle, all lists equal.
Coloring brooks_coloring(const Graph& b, const ListAssignment& lists) {
  std::vector<VertexId> vs = b.vertices();
  if (b.max_degree() == 2) {
    std::vector<VertexId> order = cycle_order(b, vs[0], b.neighbors(vs[0])[0]);
    const auto& l = lists.list(vs[0]);
    Coloring c;
    for (std::size_t i = 0; i < order.size(); ++i) c.set(order[i], l[i % 2]);
    return c;
  }
  for (VertexId v : vs) {
    const auto& nb = b.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        VertexId x = nb[i], y = nb[j];
        if (b.has_edge(x, y)) continue;
        VertexId pair[2] = {x, y};
        Graph rest = delete_vertices(b, pair);
        if (!is_connected(rest)) continue;
        Coloring c;
        Color shared = lists.list(x)[0];
        c.set(x, shared);
        c.set(y, shared);
        VertexId src[1] = {v};
        std::vector<VertexId> order = order_by_distance(rest, src, {});
        color_in_order(b, lists, order, c);
        return c;
      }
  }
  throw ListColoringError("no Brooks triple in a regular non-complete block");
}

// b is 2-connected (or a single edge) with |L| >= degree.
std::optional<Coloring> color_two_connected(const Graph& b, const ListAssignment& lists,
                                            std::string& route) {
  if (auto s = find_slack(b, lists)) {
    route = "slack";
    return greedy_with_slack(b, lists, *s);
  }
  BlockKind kind = classify_block(b);
  auto diff = differing_edge(b, lists);
  if (kind == BlockKind::complete) {
    if (!diff) return std::nullopt;
    auto [u, v] = *diff;
    std::vector<VertexId> order{u};
    for (VertexId x : b.vertices())
      if (x != u && x != v) order.push_back(x);
    order.push_back(v);
    route = "complete-lists";
    return color_complete_with_lists(order, lists);
  }
  if (kind == BlockKind::odd_cycle) {
    if (!diff) return std::nullopt;
    route = "odd-cycle-lists";
    return color_odd_cycle_with_lists(cycle_order(b, diff->first, diff->second), lists);
  }
  route = "degree-choosable";
  if (!diff) return brooks_coloring(b, lists);
  auto [u, v] = *diff;
  std::vector<Color> only_u, only_v;
  for (Color c : lists.list(u))
    if (!lists.contains(v, c)) only_u.push_back(c);
  for (Color c : lists.list(v))
    if (!lists.contains(u, c)) only_v.push_back(c);
  if (only_u.empty()) std::swap(u, v), std::swap(only_u, only_v);
  Coloring c;
  c.set(u, only_u.front());
  Graph rest = delete_vertex(b, u);
  ListAssignment reduced = without_colors(b, rest, lists, c);
  Coloring tail = greedy_with_slack(rest, reduced, v);
  for (const auto& [x, col] : tail.entries()) c.set(x, col);
  return c;
}

Graph block_graph(const Block& blk) {
  Graph bg;
  for (VertexId x : blk.vertices) bg.add_vertex(x);
  for (auto [x, y] : blk.edges) bg.add_edge(x, y);
  return bg;
}

// Gallai-tree component without slack: color everything beyond a leaf block
// first, then the leaf block with its cut vertex list reduced.
std::optional<Coloring> color_via_leaf_block(const Graph& comp, const ListAssignment& lists,
                                             const BlockDecomposition& bd, std::string& route,
                                             std::vector<VertexId>& stuck) {
  std::set<VertexId> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
  for (const Block& blk : bd.blocks) {
    std::vector<VertexId> blk_cuts;
    for (VertexId x : blk.vertices)
      if (cuts.count(x)) blk_cuts.push_back(x);
    if (blk_cuts.size() != 1) continue;
    VertexId z = blk_cuts[0];
    Coloring c;
    Graph rest = delete_vertices(comp, blk.vertices);
    for (const auto& part : connected_components(rest)) {
      Graph pg = induced_subgraph(rest, part);
      VertexId slack = 0;
      for (VertexId x : part)
        if (comp.has_edge(x, z)) {
          slack = x;
          break;
        }
      Coloring pc = greedy_with_slack(pg, lists, slack);
      for (const auto& [x, col] : pc.entries()) c.set(x, col);
    }
    Graph bg = block_graph(blk);
    ListAssignment reduced;
    for (VertexId x : blk.vertices) {
      std::vector<Color> keep;
      std::set<Color> used = colors_of(c, comp.neighbors(x));
      for (Color col : lists.list(x))
        if (!used.count(col)) keep.push_back(col);
      reduced.set(x, std::move(keep));
    }
    std::string inner;
    if (auto bc = color_two_connected(bg, reduced, inner)) {
      for (const auto& [x, col] : bc->entries()) c.set(x, col);
      route = "gallai-leaf/" + inner;
      return c;
    }
    if (stuck.empty()) stuck = blk.vertices;
  }
  return std::nullopt;
}

struct Attempt {
  std::optional<Coloring> coloring;
  std::vector<std::string> routes;
  std::vector<VertexId> stuck;
};

Attempt try_dependency(const Graph& d, const ListAssignment& lists) {
  Attempt a;
  Coloring all;
  for (const auto& part : connected_components(d)) {
    Graph comp = induced_subgraph(d, part);
    if (part.size() == 1) {
      const auto& l = lists.list(part[0]);
      if (l.empty()) {
        a.stuck = part;
        return a;
      }
      all.set(part[0], l.front());
      a.routes.push_back("single");
      continue;
    }
    if (auto s = find_slack(comp, lists)) {
      Coloring c = greedy_with_slack(comp, lists, *s);
      for (const auto& [x, col] : c.entries()) all.set(x, col);
      a.routes.push_back("slack");
      continue;
    }
    BlockDecomposition bd = blocks(comp);
    bool gallai = std::all_of(bd.blocks.begin(), bd.blocks.end(),
                              [](const Block& b) { return b.kind != BlockKind::other; });
    if (!gallai) {
      auto c = degree_choose(comp, lists);
      if (!c) throw ListColoringError("degree_choose refused a non-Gallai component");
      for (const auto& [x, col] : c->entries()) all.set(x, col);
      a.routes.push_back("degree-choosable");
      continue;
    }
    std::string route;
    std::optional<Coloring> c;
    if (bd.blocks.size() == 1) {
      c = color_two_connected(comp, lists, route);
      if (!c) a.stuck = part;
    } else {
      c = color_via_leaf_block(comp, lists, bd, route, a.stuck);
    }
    if (!c) return a;
    for (const auto& [x, col] : c->entries()) all.set(x, col);
    a.routes.push_back(route);
  }
  a.coloring = std::move(all);
  return a;
}

}  // namespace

Coloring greedy_with_slack(const Graph& g, const ListAssignment& lists, VertexId slack) {
  if (!g.has_vertex(slack)) throw PreconditionError("slack vertex not in graph");
  if (!is_connected(g)) throw PreconditionError("greedy_with_slack needs a connected graph");
  require_degree_lists(g, lists);
  if (lists.size(slack) <= g.degree(slack))
    throw PreconditionError("vertex " + std::to_string(slack) + " has no slack");
  VertexId src[1] = {slack};
  std::vector<VertexId> order = order_by_distance(g, src, {});
  Coloring c;
  color_in_order(g, lists, order, c);
  check_list_coloring(g, lists, c);
  return c;
}

Coloring color_complete_with_lists(std::span<const VertexId> vs, const ListAssignment& lists) {
  const std::size_t n = vs.size();
  if (n == 0) return {};
  for (VertexId v : vs)
    if (lists.size(v) != n - 1)
      throw PreconditionError("complete-graph lists must have size n-1 (vertex " + std::to_string(v) + ")");
  if (lists.list(vs.front()) == lists.list(vs.back()))
    throw PreconditionError("first and last lists must differ");
  Coloring c;
  for (Color col : lists.list(vs.front()))
    if (!lists.contains(vs.back(), col)) {
      c.set(vs.front(), col);
      break;
    }
  std::set<Color> used{c.at(vs.front())};
  for (std::size_t i = 1; i < n; ++i) {
    bool done = false;
    for (Color col : lists.list(vs[i]))
      if (!used.count(col)) {
        c.set(vs[i], col);
        used.insert(col);
        done = true;
        break;
      }
    if (!done) throw ListColoringError("complete-graph sweep ran out of colors");
  }
  return c;
}

Coloring color_odd_cycle_with_lists(std::span<const VertexId> cyc, const ListAssignment& lists) {
  const std::size_t k = cyc.size();
  if (k < 3 || k % 2 == 0) throw PreconditionError("odd cycle of length at least 3 expected");
  for (VertexId v : cyc)
    if (lists.size(v) != 2) throw PreconditionError("odd-cycle lists must have size 2");
  if (lists.list(cyc.front()) == lists.list(cyc.back()))
    throw PreconditionError("first and last lists must differ");
  Coloring c;
  for (Color col : lists.list(cyc.front()))
    if (!lists.contains(cyc.back(), col)) {
      c.set(cyc.front(), col);
      break;
    }
  for (std::size_t i = 1; i < k; ++i) {
    std::set<Color> avoid{c.at(cyc[i - 1])};
    if (i == k - 1) avoid.insert(c.at(cyc[0]));
    bool done = false;
    for (Color col : lists.list(cyc[i]))
      if (!avoid.count(col)) {
        c.set(cyc[i], col);
        done = true;
        break;
      }
    if (!done) throw ListColoringError("odd-cycle sweep ran out of colors");
  }
  return c;
}

std::optional<Coloring> degree_choose(const Graph& g, const ListAssignment& lists) {
  if (g.empty()) return Coloring{};
  if (!is_connected(g)) throw PreconditionError("degree_choose needs a connected graph");
  require_degree_lists(g, lists);
  if (auto s = find_slack(g, lists)) return greedy_with_slack(g, lists, *s);
  BlockDecomposition bd = blocks(g);
  const Block* target = nullptr;
  for (const Block& b : bd.blocks)
    if (b.kind == BlockKind::other && (!target || b.vertices < target->vertices)) target = &b;
  if (!target) return std::nullopt;

  Coloring c;
  std::set<VertexId> inside(target->vertices.begin(), target->vertices.end());
  std::vector<VertexId> order = order_by_distance(g, target->vertices, inside);
  color_in_order(g, lists, order, c);
  Graph bg = block_graph(*target);
  ListAssignment reduced;
  for (VertexId x : target->vertices) {
    std::set<Color> used = colors_of(c, g.neighbors(x));
    std::vector<Color> keep;
    for (Color col : lists.list(x))
      if (!used.count(col)) keep.push_back(col);
    reduced.set(x, std::move(keep));
  }
  std::string route;
  auto bc = color_two_connected(bg, reduced, route);
  if (!bc) throw ListColoringError("qualifying block could not be colored");
  for (const auto& [x, col] : bc->entries()) c.set(x, col);
  check_list_coloring(g, lists, c);
  return c;
}

DependencyColoring color_dependency_graph(const Graph& d, const ListAssignment& lists,
                                          const PerturbationHook& hook) {
  DependencyProblem problem{d, lists};
  require_degree_lists(problem.graph, problem.lists);
  std::size_t budget = connected_components(d).size();
  std::set<std::vector<VertexId>> perturbed;
  DependencyColoring out;
  while (true) {
    Attempt a = try_dependency(problem.graph, problem.lists);
    if (a.coloring) {
      check_list_coloring(problem.graph, problem.lists, *a.coloring);
      out.coloring = std::move(*a.coloring);
      out.routes = std::move(a.routes);
      return out;
    }
    std::string where;
    for (VertexId v : a.stuck) where += " " + std::to_string(v);
    if (!hook) throw ListColoringError("dependency graph stuck on block {" + where + " } and no hook");
    if (out.perturbations >= budget || !perturbed.insert(a.stuck).second)
      throw ListColoringError("perturbation hook exhausted on block {" + where + " }");
    auto next = hook(a.stuck);
    if (!next) throw ListColoringError("perturbation hook declined block {" + where + " }");
    problem = std::move(*next);
    require_degree_lists(problem.graph, problem.lists);
    ++out.perturbations;
  }
}

}  // namespace wdc
