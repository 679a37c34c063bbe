#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"
#include "wdc/reductions.hpp"

namespace wdc {

struct VertexClassification {
  std::set<VertexId> a4;      // degree >= 4
  std::set<VertexId> a3star;  // special 3-vertices
  // min(d(w), 3) neighbors of w, sorted.
  std::map<VertexId, std::vector<VertexId>> nstar;
};

// A 3-vertex v is special when its neighbors can be labeled u1, u2, u3 with
// d(u1) = d(u2) = 3, u1 and u2 each having two 4+ neighbors, and every
// neighbor of u3 of degree 3.
bool is_a3star(const Graph& g, VertexId v);

// N*(w) minimizes |N*(w) ∩ A3*|, then maximizes the edges it induces in g,
// then takes the lexicographically smallest set.
VertexClassification classify(const Graph& g);

// Union of cliques on N*(v) over all v.
Graph build_gprime(const Graph& g, const VertexClassification& cls);

struct AuxiliaryH {
  Graph h;
  // Every G' edge inside A4 ∪ A3* with an A4 endpoint is an edge of h.
  bool covers_a4_edges = true;
};

class PipelineInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Replaces every vertex outside A4 ∪ A3* by a clique on its A4 ∪ A3*
// neighbors. Throws PipelineInvariantError if g is planar and h is not.
AuxiliaryH build_h(const Graph& g, const Graph& gprime, const VertexClassification& cls);

// Proper coloring from {1..4}; throws PipelineInvariantError if none exists.
Coloring four_color_h(const Graph& h);

// The list-coloring step could not finish; the caller falls back.
class PipelineIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c*(v) = cH(v) on A4, L(v) = {1..6} - c*(N_G'(v) ∩ A4) elsewhere, and
// G'' = G' - A4 colored from L. The result is proper on G' and verified
// 3-weak-dynamic on g.
Coloring assemble_and_color(const Graph& g, const Graph& gprime, const VertexClassification& cls,
                            const Coloring& ch);

struct PipelineResult {
  VertexClassification cls;
  Graph gprime;
  AuxiliaryH h;
  Coloring ch;
  Coloring coloring;
};

// classify, G', H, 4-coloring of H and list assembly in one call.
PipelineResult run_pipeline(const Graph& g);

struct ColoringRun {
  Coloring coloring;
  ReductionTrace trace;
  std::string base_route;  // "trivial", "pipeline" or "exact" (per component, joined)
  std::vector<std::string> fallbacks;  // lift or pipeline failures that were recovered
  std::vector<Graph> h_graphs;         // auxiliary graphs built on the way
};

class NonPlanarInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 3-weak-dynamic coloring with at most six colors for a planar graph:
// reduce, color the reduction-free base, lift back. Lift or pipeline
// failures fall back to exact search on the graph at that level.
ColoringRun wd3_color_planar_detailed(const Graph& g);
Coloring wd3_color_planar(const Graph& g);

}  // namespace wdc
