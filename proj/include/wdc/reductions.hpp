#pragma once

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdc/coloring.hpp"
#include "wdc/graph.hpp"

namespace wdc {

// Reducible configurations, in detection order.
enum class ConfigKind { L1a, L1b, L2, L3, L4, L5, L6, L7, L8, L9, L10 };

inline constexpr std::array<ConfigKind, 11> kAllKinds = {
    ConfigKind::L1a, ConfigKind::L1b, ConfigKind::L2, ConfigKind::L3, ConfigKind::L4, ConfigKind::L5,
    ConfigKind::L6,  ConfigKind::L7,  ConfigKind::L8, ConfigKind::L9, ConfigKind::L10};

std::string kind_name(ConfigKind k);   // e.g. "L3-4334"
std::string kind_short(ConfigKind k);  // e.g. "L3"
// Accepts the short or the long name.
std::optional<ConfigKind> parse_kind(std::string_view s);

// Role layout of `roles` per kind:
//   L1a  [u, w]                      degree-1 vertex u, its neighbor w
//   L1b  [v1, v2, u1, u2(, u3)]      2-vertex v1, its 3- neighbor v2
//   L2   [u, v]                      adjacent 4+ vertices
//   L3   [v1 .. v6]                  path v1 v2 v3 v4, pendants v5 at v2, v6 at v3
//   L4   [v1, v2, v3, v4]            triangles v1v2v3 and v1v3v4, d(v1) = d(v3) = 3
//   L5   [v1, v2, v3, v1', v2', v3'] 3-regular triangle and its outer neighbors
//   L6   [v1 .. v6]                  triangles v1v2v3, v1v3v4; v5, v6 outer neighbors of v2, v4
//   L7   [v1 .. v7]                  triangle v1v2v3, d(v3) = 4; v4, v5 outer at v1, v2; v6, v7 at v3
//   L8   [v1 .. v5]                  as L7 with d(v3) >= 5
//   L9/L10 [v1 .. vk, v1' .. vk']    chordless cycle of 3-vertices and outer neighbors
struct Configuration {
  ConfigKind kind = ConfigKind::L1a;
  std::vector<VertexId> roles;
  std::size_t cycle_length = 0;
  std::vector<VertexId> boundary;  // N(roles) - roles
};

// Re-checks the degree and adjacency conditions of conf against g.
bool configuration_holds(const Graph& g, const Configuration& conf);
std::optional<Configuration> detect_configuration(const Graph& g);
std::optional<Configuration> find_configuration(const Graph& g, ConfigKind kind);

struct ReductionStep {
  Configuration conf;
  std::vector<Edge> removed_edges;
  std::vector<VertexId> removed_vertices;
  std::vector<VertexId> merged;  // the pair merged into `fresh`
  std::optional<VertexId> fresh;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
};

class StaleConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<Graph, ReductionStep> apply_reduction(const Graph& g, const Configuration& conf);
Graph replay_step(const Graph& g, const ReductionStep& step);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// graphs[0] is the input, graphs[i + 1] the result of steps[i].
struct ReductionRun {
  ReductionTrace trace;
  std::vector<Graph> graphs;
};

ReductionRun reduce_fully(const Graph& g);
Graph replay(const Graph& original, const ReductionTrace& trace);

struct RestrictionRecord {
  VertexId vertex;
  std::string role;
  std::size_t restrictions;
  std::size_t bound;
};

struct LiftReport {
  Coloring coloring;
  std::string case_label;
  std::vector<RestrictionRecord> restrictions;
  std::vector<std::string> list_routes;
  std::size_t perturbations = 0;
};

// Carries the local state of the failed lift in what().
class LiftFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Color kLiftPalette = 6;

// g is the graph the step was applied to; reduced is a 3-weak-dynamic
// coloring of the reduced graph with colors in {1..6}.
LiftReport lift_coloring_detailed(const Graph& g, const ReductionStep& step, const Coloring& reduced);
Coloring lift_coloring(const Graph& g, const ReductionStep& step, const Coloring& reduced);

nlohmann::json configuration_to_json(const Configuration& c);
nlohmann::json step_to_json(const ReductionStep& s);
nlohmann::json trace_to_json(const ReductionTrace& t);

}  // namespace wdc
