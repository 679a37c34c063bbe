#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

namespace wdc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// DIMACS subset: "c" comments, one "p edge <n> <m>" header, then m lines "e <u> <v>".
Graph parse_dimacs(std::string_view text);
// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);
// Picks JSON when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

std::string to_dimacs(const Graph& g);
nlohmann::json graph_to_json(const Graph& g);

nlohmann::json coloring_to_json(const Coloring& c);
// Accepts either {"colors": {...}} or the bare map.
Coloring coloring_from_json(const nlohmann::json& j);
Coloring load_coloring(const std::string& path);

nlohmann::json lists_to_json(const ListAssignment& l);
ListAssignment lists_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);

}  // namespace wdc
