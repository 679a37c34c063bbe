#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

// Slow, obviously-correct reference implementations. None of them call into
// the library beyond the Graph accessors.
namespace wdc::testing {

// Every vertex sees min(d, k) distinct colors; c must be total.
bool naive_weak_dynamic(const Graph& g, const Coloring& c, std::size_t k);
bool naive_proper(const Graph& g, const Coloring& c);

// Calls visit on every map V -> {1..colors} (colors^n of them) until it
// returns false.
void for_each_coloring(const Graph& g, int colors, const std::function<bool(const Coloring&)>& visit);

// Smallest palette up to max_colors with a k-weak-dynamic coloring, by plain
// enumeration without symmetry breaking.
std::optional<int> naive_wd_number(const Graph& g, std::size_t k, int max_colors);
std::optional<int> naive_chromatic_number(const Graph& g, int max_colors);
std::uint64_t naive_count_weak_dynamic(const Graph& g, std::size_t k, int colors);

bool naive_list_colorable(const Graph& g, const ListAssignment& lists);
bool within_lists(const Coloring& c, const ListAssignment& lists);

// K5 or K3,3 minor by contraction and deletion search (small graphs only).
bool has_kuratowski_minor(const Graph& g);

// Every subset of {1..universe} with exactly `size` elements.
std::vector<std::vector<Color>> subsets_of_size(int universe, std::size_t size);

}  // namespace wdc::testing
