#include "wdc/pipeline.hpp"

#include <algorithm>
#include <array>

#include "wdc/exact.hpp"
#include "wdc/list_coloring.hpp"
#include "wdc/planarity.hpp"
#include "wdc/verify.hpp"

namespace wdc {

namespace {

std::size_t count_4plus(const Graph& g, VertexId v) {
  std::size_t n = 0;
  for (VertexId x : g.neighbors(v))
    if (g.degree(x) >= 4) ++n;
  return n;
}

bool all_neighbors_3(const Graph& g, VertexId v) {
  for (VertexId x : g.neighbors(v))
    if (g.degree(x) != 3) return false;
  return true;
}

std::size_t induced_edges(const Graph& g, const std::vector<VertexId>& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) ++n;
  return n;
}

std::vector<VertexId> choose_nstar(const Graph& g, VertexId w, const std::set<VertexId>& a3star) {
  const auto& nb = g.neighbors(w);
  const std::size_t want = std::min<std::size_t>(nb.size(), 3);
  if (nb.size() == want) return nb;
  std::vector<VertexId> best;
  std::size_t best_special = 0, best_edges = 0;
  std::vector<bool> pick(nb.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(want), true);
  // prev_permutation walks the subsets in lexicographic order of members.
  do {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (pick[i]) s.push_back(nb[i]);
    std::size_t special = 0;
    for (VertexId x : s) special += a3star.count(x);
    std::size_t edges = induced_edges(g, s);
    if (best.empty() || special < best_special || (special == best_special && edges > best_edges)) {
      best = s;
      best_special = special;
      best_edges = edges;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

void add_clique(Graph& g, const std::vector<VertexId>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) g.add_edge(s[i], s[j]);
}

}  // namespace

bool is_a3star(const Graph& g, VertexId v) {
  if (g.degree(v) != 3) return false;
  const auto& nb = g.neighbors(v);
  for (int k = 0; k < 3; ++k) {
    VertexId u1 = nb[(k + 1) % 3], u2 = nb[(k + 2) % 3], u3 = nb[k];
    if (g.degree(u1) != 3 || g.degree(u2) != 3) continue;
    if (count_4plus(g, u1) < 2 || count_4plus(g, u2) < 2) continue;
    if (all_neighbors_3(g, u3)) return true;
  }
  return false;
}

VertexClassification classify(const Graph& g) {
  VertexClassification cls;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) >= 4) cls.a4.insert(v);
    else if (is_a3star(g, v)) cls.a3star.insert(v);
  }
  for (VertexId w : g.vertices()) cls.nstar[w] = choose_nstar(g, w, cls.a3star);
  return cls;
}

Graph build_gprime(const Graph& g, const VertexClassification& cls) {
  Graph gp;
  for (VertexId v : g.vertices()) gp.add_vertex(v);
  gp.reserve_ids(g.next_id());
  for (const auto& [w, s] : cls.nstar) add_clique(gp, s);
  return gp;
}

AuxiliaryH build_h(const Graph& g, const Graph& gprime, const VertexClassification& cls) {
  auto kept = [&](VertexId v) { return cls.a4.count(v) || cls.a3star.count(v); };
  AuxiliaryH out;
  for (VertexId v : g.vertices())
    if (kept(v)) out.h.add_vertex(v);
  for (auto [u, v] : g.edges())
    if (kept(u) && kept(v)) out.h.add_edge(u, v);
  // Removed vertices have degree at most 3, so each step is a Y-Delta move.
  for (VertexId v : g.vertices()) {
    if (kept(v)) continue;
    std::vector<VertexId> s;
    for (VertexId x : g.neighbors(v))
      if (kept(x)) s.push_back(x);
    add_clique(out.h, s);
  }
  for (auto [u, v] : gprime.edges())
    if (kept(u) && kept(v) && (cls.a4.count(u) || cls.a4.count(v)) && !out.h.has_edge(u, v)) {
      out.covers_a4_edges = false;
      break;
    }
  if (!is_planar(out.h) && is_planar(g)) throw PipelineInvariantError("auxiliary graph H is not planar");
  return out;
}

Coloring four_color_h(const Graph& h) {
  ExactResult r = chromatic_number_exact(h, 4);
  if (!r.feasible()) throw PipelineInvariantError("auxiliary graph H is not 4-colorable");
  return r.witness;
}

Coloring assemble_and_color(const Graph& g, const Graph& gprime, const VertexClassification& cls,
                            const Coloring& ch) {
  Coloring c;
  for (VertexId v : cls.a4) c.set(v, ch.at(v));
  for (auto [u, v] : gprime.edges())
    if (cls.a4.count(u) && cls.a4.count(v) && c.at(u) == c.at(v))
      throw PipelineIncomplete("G' edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " between 4+ vertices is monochromatic under the H coloring");

  std::vector<VertexId> rest;
  for (VertexId v : g.vertices())
    if (!cls.a4.count(v)) rest.push_back(v);
  Graph gpp = induced_subgraph(gprime, rest);
  ListAssignment lists;
  for (VertexId v : rest) {
    std::set<Color> used;
    for (VertexId x : gprime.neighbors(v))
      if (cls.a4.count(x)) used.insert(c.at(x));
    lists.set(v, complement_palette(used, 6));
  }
  try {
    DependencyColoring dc = color_dependency_graph(gpp, lists, {});
    for (const auto& [v, col] : dc.coloring.entries()) c.set(v, col);
  } catch (const ListColoringError& e) {
    throw PipelineIncomplete(std::string("list coloring of G'' failed: ") + e.what());
  } catch (const PreconditionError& e) {
    throw PipelineIncomplete(std::string("G'' lists too short: ") + e.what());
  }
  if (!is_proper(gprime, c)) throw PipelineInvariantError("assembled coloring is not proper on G'");
  if (!is_weak_dynamic(g, c, 3)) throw PipelineInvariantError("assembled coloring is not 3-weak-dynamic");
  return c;
}

PipelineResult run_pipeline(const Graph& g) {
  PipelineResult r;
  r.cls = classify(g);
  r.gprime = build_gprime(g, r.cls);
  r.h = build_h(g, r.gprime, r.cls);
  r.ch = four_color_h(r.h.h);
  r.coloring = assemble_and_color(g, r.gprime, r.cls, r.ch);
  return r;
}

namespace {

Coloring exact_six(const Graph& g, const std::string& where) {
  auto c = find_weak_dynamic_coloring(g, 3, 6);
  if (!c) throw PipelineInvariantError("no 3-weak-dynamic 6-coloring exists for " + where);
  return *c;
}

Coloring color_component(const Graph& comp, ColoringRun& run) {
  ReductionRun red = reduce_fully(comp);
  for (const auto& s : red.trace.steps) run.trace.steps.push_back(s);
  const Graph& base = red.graphs.back();

  Coloring c;
  if (base.size() == 0) {
    for (VertexId v : base.vertices()) c.set(v, 1);
    run.base_route += run.base_route.empty() ? "trivial" : ",trivial";
  } else {
    std::string route = "pipeline";
    try {
      PipelineResult p = run_pipeline(base);
      run.h_graphs.push_back(p.h.h);
      c = p.coloring;
    } catch (const PipelineIncomplete& e) {
      run.fallbacks.push_back(std::string("base: ") + e.what());
      c = exact_six(base, "the reduced base graph");
      route = "exact";
    }
    run.base_route += run.base_route.empty() ? route : "," + route;
  }

  for (std::size_t i = red.trace.steps.size(); i-- > 0;) {
    const Graph& level = red.graphs[i];
    try {
      c = lift_coloring(level, red.trace.steps[i], c);
    } catch (const LiftFailure& e) {
      run.fallbacks.push_back(std::string("lift ") + kind_name(red.trace.steps[i].conf.kind) + ": " + e.what());
      c = exact_six(level, "a reduction level");
    }
  }
  return c;
}

}  // namespace

ColoringRun wd3_color_planar_detailed(const Graph& g) {
  if (!is_planar(g)) throw NonPlanarInput("input graph is not planar");
  ColoringRun run;
  for (const auto& part : connected_components(g)) {
    if (part.size() == 1) {
      run.coloring.set(part[0], 1);
      continue;
    }
    Graph comp = induced_subgraph(g, part);
    comp.reserve_ids(g.next_id());
    Coloring c = color_component(comp, run);
    for (const auto& [v, col] : c.entries()) run.coloring.set(v, col);
  }
  if (!run.coloring.is_total_on(g) || run.coloring.palette_size() > 6 || !is_weak_dynamic(g, run.coloring, 3))
    throw PipelineInvariantError("final coloring failed verification");
  return run;
}

Coloring wd3_color_planar(const Graph& g) { return wd3_color_planar_detailed(g).coloring; }

}  // namespace wdc
