#pragma once

#include <functional>
#include <optional>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

namespace wdc {

// value is empty when no admissible palette up to the bound exists.
struct ExactResult {
  std::optional<int> value;
  Coloring witness;
  std::uint64_t nodes = 0;
  bool feasible() const { return value.has_value(); }
};

ExactResult wd_number_exact(const Graph& g, std::size_t k, int max_colors);
std::optional<Coloring> find_weak_dynamic_coloring(const Graph& g, std::size_t k, int colors);

enum class Enumeration {
  canonical,  // one coloring per palette permutation class (first-use order)
  all,
};

// Visits every k-weak-dynamic coloring using colors from {1..colors}. The
// visitor returns false to stop early. Returns the number visited.
std::uint64_t enumerate_weak_dynamic(const Graph& g, std::size_t k, int colors, Enumeration mode,
                                     const std::function<bool(const Coloring&)>& visit);

ExactResult chromatic_number_exact(const Graph& g, int ub);

// Proper coloring from the lists, or nullopt once the search is exhausted.
std::optional<Coloring> list_color_exact(const Graph& g, const ListAssignment& lists);

// Pair (p, w) encoded as (p - 1) * W + w with W the wd palette size.
Coloring product_coloring(const Graph& g, const Coloring& proper, const Coloring& wd, std::size_t k);

}  // namespace wdc
