#pragma once

#include <string>
#include <vector>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

namespace wdc {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  VertexId vertex;
  std::size_t seen;
  std::size_t required;
};

struct WeakDynamicReport {
  bool valid = true;
  std::vector<Violation> violations;  // ascending vertex id
  explicit operator bool() const { return valid; }
};

// Distinct colors on the colored neighbors of v.
std::size_t seen_colors(const Graph& g, const Coloring& c, VertexId v);
std::size_t required_colors(const Graph& g, VertexId v, std::size_t k);

WeakDynamicReport check_weak_dynamic(const Graph& g, const Coloring& c, std::size_t k);
bool is_weak_dynamic(const Graph& g, const Coloring& c, std::size_t k);
bool is_proper(const Graph& g, const Coloring& c);
bool is_dynamic(const Graph& g, const Coloring& c, std::size_t k);

// v already sees min(d(v), 3) colors among its colored neighbors.
bool is_satisfied(const Graph& g, const Coloring& partial, VertexId v);
bool sees_enough(const Graph& g, const Coloring& partial, VertexId v, std::size_t k);

struct Hypergraph {
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> edges;
};

Hypergraph neighborhood_hypergraph(const Graph& g);
// Every hyperedge carries at least two colors.
bool is_proper_hypergraph_coloring(const Hypergraph& h, const Coloring& c);

std::string format_violations(const WeakDynamicReport& r);

}  // namespace wdc
