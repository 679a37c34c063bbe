#pragma once

#include <map>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

enum class MinorKind { none, k5, k33 };

struct PlanarityCertificate {
  bool planar = false;
  // Planar: cyclic neighbor order around every vertex.
  std::map<VertexId, std::vector<VertexId>> rotation;
  std::size_t faces = 0;
  // Nonplanar: branch sets of a K5 or K3,3 minor. For K3,3 the first three
  // sets form one side.
  MinorKind minor = MinorKind::none;
  std::vector<std::vector<VertexId>> branch_sets;

  explicit operator bool() const { return planar; }
};

PlanarityCertificate is_planar(const Graph& g);

// Face count of a rotation system, summed over components (an isolated
// vertex contributes one face). Returns false if some component breaks
// V - E + F = 2 or the rotation does not match g.
bool check_embedding(const Graph& g, const std::map<VertexId, std::vector<VertexId>>& rotation,
                     std::size_t* faces = nullptr);

// Branch sets disjoint, each inducing a connected subgraph, and every
// required pair of sets joined by an edge.
bool check_minor_model(const Graph& g, MinorKind kind,
                       const std::vector<std::vector<VertexId>>& branch_sets);

}  // namespace wdc
