#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

namespace wdc {

class ListColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connected g, |L(x)| >= d(x) everywhere and |L(slack)| > d(slack). Colors in
// decreasing BFS distance from the slack vertex, smallest free color first.
Coloring greedy_with_slack(const Graph& g, const ListAssignment& lists, VertexId slack);

// K_n on vertices[0..n-1], |L| = n - 1, L(first) != L(last).
Coloring color_complete_with_lists(std::span<const VertexId> vertices, const ListAssignment& lists);

// Odd cycle in cyclic order, |L| = 2, L(first) != L(last).
Coloring color_odd_cycle_with_lists(std::span<const VertexId> cycle, const ListAssignment& lists);

// Connected g with |L(x)| >= d(x). Succeeds when some vertex has slack or
// some block is neither complete nor an odd cycle; otherwise nullopt.
std::optional<Coloring> degree_choose(const Graph& g, const ListAssignment& lists);

struct DependencyProblem {
  Graph graph;
  ListAssignment lists;
};

// Receives the vertices of a block that could not be colored and returns a
// replacement problem (typically after recoloring a host vertex), or nullopt.
using PerturbationHook =
    std::function<std::optional<DependencyProblem>(const std::vector<VertexId>& stuck)>;

struct DependencyColoring {
  Coloring coloring;
  std::vector<std::string> routes;  // one entry per component
  std::size_t perturbations = 0;
};

// Proper list coloring of D; throws ListColoringError when every route and
// the hook are exhausted.
DependencyColoring color_dependency_graph(const Graph& d, const ListAssignment& lists,
                                          const PerturbationHook& hook = {});

}  // namespace wdc
