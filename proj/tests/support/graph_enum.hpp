#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc::testing {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 1
Graph complete_bipartite(std::size_t a, std::size_t b);

// One representative per isomorphism class, on vertices 1..n.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> connected_graphs(std::size_t n);
// Connected graphs on 1..max_n vertices.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

// G(n, p) on vertices 1..n.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
// Random spanning tree plus G(n, p) edges on top.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

}  // namespace wdc::testing
