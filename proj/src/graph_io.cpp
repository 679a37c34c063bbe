#include "wdc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wdc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view s, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  bool have_header = false;
  long long n = 0, m = 0, seen_edges = 0;
  Graph g;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = to_int(tok[2], line_no);
      m = to_int(tok[3], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative size in problem line");
      g = Graph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      long long u = to_int(tok[1], line_no), v = to_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop");
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      ++seen_edges;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  if (seen_edges != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen_edges));
  return g;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover the line number from the byte offset.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError(1, "graph JSON needs an integer field \"n\"");
  long long n = j["n"].get<long long>();
  if (n < 0) throw ParseError(1, "negative vertex count");
  Graph g(static_cast<std::size_t>(n));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(1, "\"edges\" must be an array");
    std::size_t idx = 0;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(1, "edge #" + std::to_string(idx) + " is not a pair of integers");
      long long u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 1 || u > n || v < 1 || v > n || u == v)
        throw ParseError(1, "edge #" + std::to_string(idx) + " has invalid endpoints");
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
      ++idx;
    }
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_graph_json(text);
    break;
  }
  return parse_dimacs(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string to_dimacs(const Graph& g) {
  VertexId n = 0;
  for (VertexId v : g.vertices()) n = std::max(n, v);
  std::ostringstream os;
  os << "p edge " << n << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  VertexId n = 0;
  for (VertexId v : g.vertices()) n = std::max(n, v);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", n}, {"edges", edges}};
}

nlohmann::json coloring_to_json(const Coloring& c) {
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [v, col] : c.entries()) m[std::to_string(v)] = col;
  return {{"colors", m}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  const nlohmann::json& m = (j.is_object() && j.contains("colors")) ? j["colors"] : j;
  if (!m.is_object()) throw ParseError(1, "coloring must be an object of vertex -> color");
  Coloring c;
  for (const auto& [key, val] : m.items()) {
    long long v = to_int(key, 1);
    if (v < 1) throw ParseError(1, "vertex id must be positive: " + key);
    if (!val.is_number_integer() || val.get<long long>() < 1)
      throw ParseError(1, "color of vertex " + key + " must be a positive integer");
    c.set(static_cast<VertexId>(v), val.get<int>());
  }
  return c;
}

Coloring load_coloring(const std::string& path) {
  std::string text = read_file(path);
  try {
    return coloring_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
}

nlohmann::json lists_to_json(const ListAssignment& l) {
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [v, cols] : l.entries()) m[std::to_string(v)] = cols;
  return {{"lists", m}};
}

ListAssignment lists_from_json(const nlohmann::json& j) {
  const nlohmann::json& m = (j.is_object() && j.contains("lists")) ? j["lists"] : j;
  if (!m.is_object()) throw ParseError(1, "lists must be an object of vertex -> [colors]");
  ListAssignment l;
  for (const auto& [key, val] : m.items()) {
    long long v = to_int(key, 1);
    if (v < 1 || !val.is_array()) throw ParseError(1, "bad list entry for " + key);
    std::vector<Color> cols;
    for (const auto& c : val) {
      if (!c.is_number_integer() || c.get<long long>() < 1)
        throw ParseError(1, "list of " + key + " holds a non-positive color");
      cols.push_back(c.get<int>());
    }
    l.set(static_cast<VertexId>(v), std::move(cols));
  }
  return l;
}

}  // namespace wdc
