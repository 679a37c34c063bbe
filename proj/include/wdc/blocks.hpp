#pragma once

#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

// K2 and K3 count as complete.
enum class BlockKind { complete, odd_cycle, other };

struct Block {
  std::vector<VertexId> vertices;  // sorted
  std::vector<Edge> edges;         // (min, max), sorted
  BlockKind kind = BlockKind::other;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // sorted
};

// Isolated vertices belong to no block.
BlockDecomposition blocks(const Graph& g);

BlockKind classify_block(const Graph& block_graph);
const char* block_kind_name(BlockKind k);

}  // namespace wdc
