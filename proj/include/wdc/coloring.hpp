#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

using Color = int;

// Map from vertex to a positive color. Vertices without an entry are
// uncolored, which makes the same type serve as a partial coloring.
class Coloring {
 public:
  Coloring() = default;

  void set(VertexId v, Color c);
  void erase(VertexId v) { colors_.erase(v); }
  std::optional<Color> get(VertexId v) const;
  bool has(VertexId v) const { return colors_.count(v) != 0; }
  Color at(VertexId v) const;

  std::size_t size() const { return colors_.size(); }
  // Largest color in use (0 when empty).
  Color palette_size() const;
  std::size_t distinct_colors() const;
  bool is_total_on(const Graph& g) const;

  const std::map<VertexId, Color>& entries() const { return colors_; }
  bool operator==(const Coloring& o) const { return colors_ == o.colors_; }

 private:
  std::map<VertexId, Color> colors_;
};

// Distinct colors on the colored members of vs.
std::set<Color> colors_of(const Coloring& c, std::span<const VertexId> vs);

class ListAssignment {
 public:
  void set(VertexId v, std::vector<Color> colors);
  const std::vector<Color>& list(VertexId v) const;
  bool has(VertexId v) const { return lists_.count(v) != 0; }
  std::size_t size(VertexId v) const { return list(v).size(); }
  bool contains(VertexId v, Color c) const;
  void remove(VertexId v, Color c);
  const std::map<VertexId, std::vector<Color>>& entries() const { return lists_; }

 private:
  std::map<VertexId, std::vector<Color>> lists_;
};

// {1..palette} minus the restricted colors, ascending.
std::vector<Color> complement_palette(const std::set<Color>& restricted, Color palette);

}  // namespace wdc
