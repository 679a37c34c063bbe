#include "wdc/coloring.hpp"

#include <algorithm>

namespace wdc {

void Coloring::set(VertexId v, Color c) {
  if (c < 1) throw GraphError("colors must be positive (vertex " + std::to_string(v) + ")");
  colors_[v] = c;
}

std::optional<Color> Coloring::get(VertexId v) const {
  auto it = colors_.find(v);
  if (it == colors_.end()) return std::nullopt;
  return it->second;
}

Color Coloring::at(VertexId v) const {
  auto it = colors_.find(v);
  if (it == colors_.end()) throw GraphError("vertex " + std::to_string(v) + " is uncolored");
  return it->second;
}

Color Coloring::palette_size() const {
  Color m = 0;
  for (const auto& [_, c] : colors_) m = std::max(m, c);
  return m;
}

std::size_t Coloring::distinct_colors() const {
  std::set<Color> s;
  for (const auto& [_, c] : colors_) s.insert(c);
  return s.size();
}

bool Coloring::is_total_on(const Graph& g) const {
  for (VertexId v : g.vertices())
    if (!has(v)) return false;
  return true;
}

std::set<Color> colors_of(const Coloring& c, std::span<const VertexId> vs) {
  std::set<Color> out;
  for (VertexId v : vs)
    if (auto col = c.get(v)) out.insert(*col);
  return out;
}

void ListAssignment::set(VertexId v, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  lists_[v] = std::move(colors);
}

const std::vector<Color>& ListAssignment::list(VertexId v) const {
  auto it = lists_.find(v);
  if (it == lists_.end()) throw GraphError("no list for vertex " + std::to_string(v));
  return it->second;
}

bool ListAssignment::contains(VertexId v, Color c) const {
  const auto& l = list(v);
  return std::binary_search(l.begin(), l.end(), c);
}

void ListAssignment::remove(VertexId v, Color c) {
  auto& l = lists_.at(v);
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it != l.end() && *it == c) l.erase(it);
}

std::vector<Color> complement_palette(const std::set<Color>& restricted, Color palette) {
  std::vector<Color> out;
  for (Color c = 1; c <= palette; ++c)
    if (!restricted.count(c)) out.push_back(c);
  return out;
}

}  // namespace wdc
