#include "wdc/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wdc {

namespace {

void require_total(const Graph& g, const Coloring& c) {
  for (VertexId v : g.vertices())
    if (!c.has(v)) throw PreconditionError("coloring leaves vertex " + std::to_string(v) + " uncolored");
}

}  // namespace

std::size_t seen_colors(const Graph& g, const Coloring& c, VertexId v) {
  return colors_of(c, g.neighbors(v)).size();
}

std::size_t required_colors(const Graph& g, VertexId v, std::size_t k) {
  return std::min(g.degree(v), k);
}

WeakDynamicReport check_weak_dynamic(const Graph& g, const Coloring& c, std::size_t k) {
  require_total(g, c);
  WeakDynamicReport r;
  for (VertexId v : g.vertices()) {
    std::size_t seen = seen_colors(g, c, v), need = required_colors(g, v, k);
    if (seen < need) r.violations.push_back({v, seen, need});
  }
  r.valid = r.violations.empty();
  return r;
}

bool is_weak_dynamic(const Graph& g, const Coloring& c, std::size_t k) {
  return check_weak_dynamic(g, c, k).valid;
}

bool is_proper(const Graph& g, const Coloring& c) {
  require_total(g, c);
  for (auto [u, v] : g.edges())
    if (c.at(u) == c.at(v)) return false;
  return true;
}

bool is_dynamic(const Graph& g, const Coloring& c, std::size_t k) {
  return is_proper(g, c) && is_weak_dynamic(g, c, k);
}

bool sees_enough(const Graph& g, const Coloring& partial, VertexId v, std::size_t k) {
  return seen_colors(g, partial, v) >= required_colors(g, v, k);
}

bool is_satisfied(const Graph& g, const Coloring& partial, VertexId v) {
  return sees_enough(g, partial, v, 3);
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  Hypergraph h;
  h.vertices = g.vertices();
  for (VertexId v : h.vertices) h.edges.push_back(g.neighbors(v));
  return h;
}

bool is_proper_hypergraph_coloring(const Hypergraph& h, const Coloring& c) {
  for (const auto& e : h.edges) {
    std::set<Color> cols;
    for (VertexId v : e) cols.insert(c.at(v));
    if (cols.size() < 2) return false;
  }
  return true;
}

std::string format_violations(const WeakDynamicReport& r) {
  std::ostringstream os;
  for (const auto& v : r.violations)
    os << "vertex " << v.vertex << " sees " << v.seen << " of " << v.required << " colors\n";
  return os.str();
}

}  // namespace wdc
