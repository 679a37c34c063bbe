#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

// c5, k4, k4_subdivided, k5, k33, cube, fig7a, fig7b. Throws
// std::invalid_argument on an unknown name.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

// Uniform integer in [0, bound) drawn as rng() % bound, so streams are
// identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

// Stacked triangulation on n >= 3 vertices followed by random edge flips;
// exactly 3n - 6 edges for n >= 3.
Graph random_triangulation(std::size_t n, std::mt19937_64& rng);

// Connected planar graph: a random triangulation thinned by deleting random
// non-bridge edges down to max(n - 1, round(density * (3n - 6))) edges.
// Deterministic per seed and certified planar before return.
Graph random_planar(std::size_t n, double density, std::uint64_t seed);

// Planar dual of a random triangulation on `faces` >= 4 vertices: a
// 3-regular planar graph on 2 * faces - 4 vertices.
Graph random_cubic_planar(std::size_t faces, std::mt19937_64& rng);

// Copy of g with ids 1..n shuffled.
Graph shuffle_ids(const Graph& g, std::mt19937_64& rng);

}  // namespace wdc
