#include "wdc/reductions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wdc {

namespace {

struct KindInfo {
  ConfigKind kind;
  const char* shortname;
  const char* longname;
};

constexpr KindInfo kKindInfo[] = {
    {ConfigKind::L1a, "L1a", "L1a-degree1"},
    {ConfigKind::L1b, "L1b", "L1b-2vertex-3minus"},
    {ConfigKind::L2, "L2", "L2-adjacent-4plus"},
    {ConfigKind::L3, "L3", "L3-4334"},
    {ConfigKind::L4, "L4", "L4-adjacent-3faces"},
    {ConfigKind::L5, "L5", "L5-3regular-triangle"},
    {ConfigKind::L6, "L6", "L6-triangle-pair"},
    {ConfigKind::L7, "L7", "L7-triangle-deg4-apex"},
    {ConfigKind::L8, "L8", "L8-triangle-deg5plus-apex"},
    {ConfigKind::L9, "L9", "L9-3regular-cycle-with-free-vertex"},
    {ConfigKind::L10, "L10", "L10-3regular-cycle"},
};

const KindInfo& info(ConfigKind k) {
  for (const auto& i : kKindInfo)
    if (i.kind == k) return i;
  throw std::logic_error("unknown configuration kind");
}

bool all_distinct(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::vector<VertexId> others(const Graph& g, VertexId v, std::initializer_list<VertexId> excl) {
  std::vector<VertexId> out;
  for (VertexId w : g.neighbors(v))
    if (std::find(excl.begin(), excl.end(), w) == excl.end()) out.push_back(w);
  return out;
}

std::vector<VertexId> boundary_of(const Graph& g, const std::vector<VertexId>& roles) {
  std::set<VertexId> in(roles.begin(), roles.end()), out;
  for (VertexId v : in)
    for (VertexId w : g.neighbors(v))
      if (!in.count(w)) out.insert(w);
  return {out.begin(), out.end()};
}

Configuration make(const Graph& g, ConfigKind k, std::vector<VertexId> roles, std::size_t cycle = 0) {
  Configuration c;
  c.kind = k;
  c.boundary = boundary_of(g, roles);
  c.roles = std::move(roles);
  c.cycle_length = cycle;
  return c;
}

// ---- per-kind scans, lowest ids first ----

std::optional<Configuration> scan_l1a(const Graph& g) {
  for (const auto& [u, nb] : g.adjacency())
    if (nb.size() == 1) return make(g, ConfigKind::L1a, {u, nb[0]});
  return std::nullopt;
}

std::optional<Configuration> scan_l1b(const Graph& g) {
  for (const auto& [v1, nb] : g.adjacency()) {
    if (nb.size() != 2) continue;
    for (VertexId v2 : nb) {
      std::size_t d2 = g.degree(v2);
      if (d2 != 2 && d2 != 3) continue;
      std::vector<VertexId> roles{v1, v2, v2 == nb[0] ? nb[1] : nb[0]};
      for (VertexId u : others(g, v2, {v1})) roles.push_back(u);
      return make(g, ConfigKind::L1b, roles);
    }
  }
  return std::nullopt;
}

std::optional<Configuration> scan_l2(const Graph& g) {
  for (const auto& [u, nb] : g.adjacency()) {
    if (nb.size() < 4) continue;
    for (VertexId v : nb)
      if (g.degree(v) >= 4) return make(g, ConfigKind::L2, {u, v});
  }
  return std::nullopt;
}

std::optional<Configuration> scan_l3(const Graph& g) {
  for (const auto& [v2, n2] : g.adjacency()) {
    if (n2.size() != 3) continue;
    for (VertexId v3 : n2) {
      if (g.degree(v3) != 3) continue;
      for (VertexId v1 : n2) {
        if (v1 == v3 || g.degree(v1) < 4) continue;
        auto r5 = others(g, v2, {v1, v3});
        if (r5.size() != 1 || g.degree(r5[0]) != 3) continue;
        for (VertexId v4 : g.neighbors(v3)) {
          if (v4 == v2 || g.degree(v4) < 4) continue;
          auto r6 = others(g, v3, {v2, v4});
          if (r6.size() != 1 || g.degree(r6[0]) != 3) continue;
          std::vector<VertexId> roles{v1, v2, v3, v4, r5[0], r6[0]};
          if (all_distinct(roles)) return make(g, ConfigKind::L3, roles);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Configuration> scan_l4(const Graph& g) {
  for (const auto& [v1, n1] : g.adjacency()) {
    if (n1.size() != 3) continue;
    for (VertexId v3 : n1) {
      if (g.degree(v3) != 3) continue;
      auto a = others(g, v1, {v3});
      auto b = others(g, v3, {v1});
      if (a == b) return make(g, ConfigKind::L4, {v1, a[0], v3, a[1]});
    }
  }
  return std::nullopt;
}

std::optional<Configuration> scan_l5(const Graph& g) {
  for (const auto& [v1, n1] : g.adjacency()) {
    if (n1.size() != 3) continue;
    for (VertexId v2 : n1) {
      if (v2 < v1 || g.degree(v2) != 3) continue;
      for (VertexId v3 : n1) {
        if (v3 <= v2 || g.degree(v3) != 3 || !g.has_edge(v2, v3)) continue;
        auto p1 = others(g, v1, {v2, v3}), p2 = others(g, v2, {v1, v3}), p3 = others(g, v3, {v1, v2});
        std::vector<VertexId> roles{v1, v2, v3, p1[0], p2[0], p3[0]};
        if (all_distinct(roles)) return make(g, ConfigKind::L5, roles);
      }
    }
  }
  return std::nullopt;
}

std::optional<Configuration> scan_l6(const Graph& g) {
  for (const auto& [v3, n3] : g.adjacency()) {
    if (n3.size() != 3) continue;
    for (VertexId v1 : n3) {
      if (g.degree(v1) < 4) continue;
      auto rest = others(g, v3, {v1});
      VertexId v2 = rest[0], v4 = rest[1];
      if (g.degree(v2) != 3 || g.degree(v4) != 3) continue;
      if (!g.has_edge(v1, v2) || !g.has_edge(v1, v4)) continue;
      auto r5 = others(g, v2, {v1, v3}), r6 = others(g, v4, {v1, v3});
      if (r5.size() != 1 || r6.size() != 1) continue;
      if (!all_distinct({v1, v2, v3, v4, r5[0]}) || !all_distinct({v1, v2, v3, v4, r6[0]})) continue;
      return make(g, ConfigKind::L6, {v1, v2, v3, v4, r5[0], r6[0]});
    }
  }
  return std::nullopt;
}

// Triangle v1 v2 v3 with d(v1) = d(v2) = 3, v3 the only 4+ neighbor of v1 and v2.
std::optional<Configuration> scan_apex(const Graph& g, bool deg4) {
  for (const auto& [v3, n3] : g.adjacency()) {
    if (deg4 ? n3.size() != 4 : n3.size() < 5) continue;
    for (VertexId v1 : n3) {
      if (g.degree(v1) != 3) continue;
      for (VertexId v2 : n3) {
        if (v2 <= v1 || g.degree(v2) != 3 || !g.has_edge(v1, v2)) continue;
        VertexId v4 = others(g, v1, {v2, v3})[0], v5 = others(g, v2, {v1, v3})[0];
        if (g.degree(v4) > 3 || g.degree(v5) > 3) continue;
        if (deg4) {
          auto r = others(g, v3, {v1, v2});
          std::vector<VertexId> roles{v1, v2, v3, v4, v5, r[0], r[1]};
          if (all_distinct(roles)) return make(g, ConfigKind::L7, roles);
        } else {
          std::vector<VertexId> roles{v1, v2, v3, v4, v5};
          if (all_distinct(roles)) return make(g, ConfigKind::L8, roles);
        }
      }
    }
  }
  return std::nullopt;
}

// ---- chordless cycles through degree-3 vertices ----

constexpr std::uint64_t kCycleSearchBudget = 4'000'000;

class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g) {
    // 2-core of the subgraph induced by 3-vertices.
    std::map<VertexId, std::size_t> deg;
    for (const auto& [v, nb] : g.adjacency())
      if (nb.size() == 3) deg[v] = 0;
    for (auto& [v, d] : deg)
      for (VertexId w : g.neighbors(v)) d += deg.count(w);
    std::vector<VertexId> stack;
    for (auto& [v, d] : deg)
      if (d < 2) stack.push_back(v);
    std::set<VertexId> gone;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      if (!gone.insert(v).second) continue;
      for (VertexId w : g.neighbors(v)) {
        auto it = deg.find(w);
        if (it != deg.end() && !gone.count(w) && --it->second < 2) stack.push_back(w);
      }
    }
    for (auto& [v, d] : deg)
      if (!gone.count(v)) core_.insert(v);
  }

  // First chordless cycle (by length, then lexicographically in canonical
  // form) accepted by `accept`.
  std::optional<std::vector<VertexId>> find(const std::function<bool(const std::vector<VertexId>&)>& accept) {
    for (std::size_t len = 3; len <= core_.size(); ++len) {
      for (VertexId s : core_) {
        auto dist = distances_from(s);
        path_.assign(1, s);
        std::optional<std::vector<VertexId>> hit;
        extend(len, dist, accept, hit);
        if (hit) return hit;
        if (spent_ > kCycleSearchBudget) return std::nullopt;
      }
    }
    return std::nullopt;
  }

 private:
  bool usable(VertexId w, VertexId s) const { return w > s && core_.count(w); }

  std::map<VertexId, std::size_t> distances_from(VertexId s) const {
    std::map<VertexId, std::size_t> dist{{s, 0}};
    std::vector<VertexId> frontier{s};
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (VertexId v : frontier)
        for (VertexId w : g_.neighbors(v))
          if (usable(w, s) && !dist.count(w)) {
            dist[w] = dist[v] + 1;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    return dist;
  }

  // Returns true once `hit` is set or the budget is gone.
  bool extend(std::size_t len, const std::map<VertexId, std::size_t>& dist,
              const std::function<bool(const std::vector<VertexId>&)>& accept,
              std::optional<std::vector<VertexId>>& hit) {
    if (++spent_ > kCycleSearchBudget) return true;
    VertexId s = path_[0], last = path_.back();
    std::size_t pos = path_.size();  // index the next vertex would take
    if (pos == len) {
      if (!g_.has_edge(last, s) || !(path_[1] < path_.back())) return false;
      if (accept(path_)) {
        hit = path_;
        return true;
      }
      return false;
    }
    for (VertexId w : g_.neighbors(last)) {
      if (!usable(w, s)) continue;
      auto d = dist.find(w);
      if (d == dist.end() || d->second > len - pos) continue;
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      // Induced path: w touches only `last`, plus s when it closes the cycle.
      bool chord = false;
      for (std::size_t i = 0; i + 1 < pos && !chord; ++i) {
        if (i == 0 && pos == len - 1) continue;
        if (g_.has_edge(w, path_[i])) chord = true;
      }
      if (chord) continue;
      if (pos == len - 1 && !g_.has_edge(w, s)) continue;
      path_.push_back(w);
      bool stop = extend(len, dist, accept, hit);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  std::set<VertexId> core_;
  std::vector<VertexId> path_;
  std::uint64_t spent_ = 0;
};

std::vector<VertexId> outer_neighbors(const Graph& g, const std::vector<VertexId>& cyc) {
  std::set<VertexId> on(cyc.begin(), cyc.end());
  std::vector<VertexId> out;
  for (VertexId v : cyc) {
    VertexId o = 0;
    for (VertexId w : g.neighbors(v))
      if (!on.count(w)) o = w;
    out.push_back(o);
  }
  return out;
}

bool has_free_vertex_pattern(const Graph& g, const std::vector<VertexId>& cyc) {
  auto outer = outer_neighbors(g, cyc);
  std::size_t k = cyc.size();
  bool free_even = false, free_odd = false;
  for (std::size_t i = 0; i < k; ++i)
    if (g.degree(outer[i]) <= 3) (i % 2 ? free_odd : free_even) = true;
  if (k % 2) return free_even || free_odd;
  return free_even && free_odd;
}

std::vector<VertexId> with_outer(const Graph& g, const std::vector<VertexId>& cyc) {
  std::vector<VertexId> roles = cyc;
  for (VertexId o : outer_neighbors(g, cyc)) roles.push_back(o);
  return roles;
}

std::optional<Configuration> scan_l9(const Graph& g) {
  CycleSearch cs(g);
  auto cyc = cs.find([&](const std::vector<VertexId>& c) { return has_free_vertex_pattern(g, c); });
  if (!cyc) return std::nullopt;
  return make(g, ConfigKind::L9, with_outer(g, *cyc), cyc->size());
}

bool common_neighbor(const Graph& g, VertexId a, VertexId b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::vector<VertexId> both;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(both));
  return !both.empty();
}

// Relabels an even cycle so that v'1, v'3, ... all have degree >= 4 when
// some parity class allows it, preferring v'1 = v'3, then a pair v'1, v'3
// with no common neighbor and no edge between them.
std::vector<VertexId> label_l10(const Graph& g, const std::vector<VertexId>& cyc) {
  std::size_t k = cyc.size();
  if (k % 2) return cyc;
  auto outer = outer_neighbors(g, cyc);
  std::optional<std::vector<VertexId>> best;
  int best_score = 3;
  for (int dir : {1, -1}) {
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<VertexId> lab(k), out(k);
      for (std::size_t j = 0; j < k; ++j) {
        long n = static_cast<long>(k);
        auto idx = static_cast<std::size_t>(((static_cast<long>(r) + dir * static_cast<long>(j)) % n + n) % n);
        lab[j] = cyc[idx];
        out[j] = outer[idx];
      }
      bool ok = true;
      for (std::size_t j = 0; j < k; j += 2)
        if (g.degree(out[j]) < 4) ok = false;
      if (!ok) continue;
      int score = out[0] == out[2] ? 0
                  : (!common_neighbor(g, out[0], out[2]) && !g.has_edge(out[0], out[2])) ? 1
                                                                                           : 2;
      if (score < best_score) best_score = score, best = lab;
    }
  }
  return best ? *best : cyc;
}

std::optional<Configuration> scan_l10(const Graph& g) {
  CycleSearch cs(g);
  auto cyc = cs.find([](const std::vector<VertexId>&) { return true; });
  if (!cyc) return std::nullopt;
  return make(g, ConfigKind::L10, with_outer(g, label_l10(g, *cyc)), cyc->size());
}

std::optional<Configuration> scan(const Graph& g, ConfigKind k) {
  switch (k) {
    case ConfigKind::L1a: return scan_l1a(g);
    case ConfigKind::L1b: return scan_l1b(g);
    case ConfigKind::L2: return scan_l2(g);
    case ConfigKind::L3: return scan_l3(g);
    case ConfigKind::L4: return scan_l4(g);
    case ConfigKind::L5: return scan_l5(g);
    case ConfigKind::L6: return scan_l6(g);
    case ConfigKind::L7: return scan_apex(g, true);
    case ConfigKind::L8: return scan_apex(g, false);
    case ConfigKind::L9: return scan_l9(g);
    case ConfigKind::L10: return scan_l10(g);
  }
  return std::nullopt;
}

bool cycle_holds(const Graph& g, const Configuration& c) {
  std::size_t k = c.cycle_length;
  if (k < 3 || c.roles.size() != 2 * k) return false;
  std::vector<VertexId> cyc(c.roles.begin(), c.roles.begin() + static_cast<long>(k));
  if (!all_distinct(cyc)) return false;
  for (VertexId v : cyc)
    if (!g.has_vertex(v) || g.degree(v) != 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
    }
  auto outer = outer_neighbors(g, cyc);
  if (!std::equal(outer.begin(), outer.end(), c.roles.begin() + static_cast<long>(k))) return false;
  return c.kind == ConfigKind::L10 || has_free_vertex_pattern(g, cyc);
}

bool l10_identifies(const Graph& g, const Configuration& c) {
  std::size_t k = c.cycle_length;
  if (k % 2 || k < 4) return false;
  for (std::size_t j = 0; j < k; j += 2)
    if (g.degree(c.roles[k + j]) < 4) return false;
  // A common neighbor of the pair would see one color twice after the merge.
  VertexId a = c.roles[k], b = c.roles[k + 2];
  return a != b && !common_neighbor(g, a, b);
}

}  // namespace

std::string kind_name(ConfigKind k) { return info(k).longname; }
std::string kind_short(ConfigKind k) { return info(k).shortname; }

std::optional<ConfigKind> parse_kind(std::string_view s) {
  for (const auto& i : kKindInfo)
    if (s == i.shortname || s == i.longname) return i.kind;
  return std::nullopt;
}

bool configuration_holds(const Graph& g, const Configuration& conf) {
  for (VertexId v : conf.roles)
    if (!g.has_vertex(v)) return false;
  if (conf.kind == ConfigKind::L9 || conf.kind == ConfigKind::L10) return cycle_holds(g, conf);
  const auto& r = conf.roles;
  auto d = [&](std::size_t i) { return g.degree(r[i]); };
  auto e = [&](std::size_t i, std::size_t j) { return g.has_edge(r[i], r[j]); };
  switch (conf.kind) {
    case ConfigKind::L1a:
      return r.size() == 2 && d(0) == 1 && e(0, 1);
    case ConfigKind::L1b: {
      if (r.size() < 4 || d(0) != 2 || !e(0, 1) || !e(0, 2) || r[1] == r[2]) return false;
      if (d(1) != 2 && d(1) != 3) return false;
      if (r.size() != d(1) + 2) return false;
      for (std::size_t i = 3; i < r.size(); ++i)
        if (!e(1, i) || r[i] == r[0]) return false;
      return true;
    }
    case ConfigKind::L2:
      return r.size() == 2 && d(0) >= 4 && d(1) >= 4 && e(0, 1);
    case ConfigKind::L3:
      return r.size() == 6 && all_distinct(r) && e(0, 1) && e(1, 2) && e(2, 3) && e(1, 4) && e(2, 5) &&
             d(0) >= 4 && d(3) >= 4 && d(1) == 3 && d(2) == 3 && d(4) == 3 && d(5) == 3;
    case ConfigKind::L4:
      return r.size() == 4 && all_distinct(r) && d(0) == 3 && d(2) == 3 && e(0, 1) && e(0, 2) &&
             e(0, 3) && e(1, 2) && e(2, 3);
    case ConfigKind::L5:
      return r.size() == 6 && all_distinct(r) && e(0, 1) && e(1, 2) && e(0, 2) && d(0) == 3 && d(1) == 3 &&
             d(2) == 3 && e(0, 3) && e(1, 4) && e(2, 5);
    case ConfigKind::L6:
      return r.size() == 6 && all_distinct({r[0], r[1], r[2], r[3], r[4]}) &&
             all_distinct({r[0], r[1], r[2], r[3], r[5]}) && e(0, 1) && e(1, 2) && e(0, 2) && e(0, 3) &&
             e(2, 3) && e(1, 4) && e(3, 5) && d(0) >= 4 && d(1) == 3 && d(2) == 3 && d(3) == 3;
    case ConfigKind::L7:
    case ConfigKind::L8: {
      bool l7 = conf.kind == ConfigKind::L7;
      if (r.size() != (l7 ? 7u : 5u) || !all_distinct(r)) return false;
      if (!(e(0, 1) && e(1, 2) && e(0, 2) && e(0, 3) && e(1, 4))) return false;
      if (d(0) != 3 || d(1) != 3 || d(3) > 3 || d(4) > 3) return false;
      if (l7) return d(2) == 4 && e(2, 5) && e(2, 6);
      return d(2) >= 5;
    }
    default:
      return false;
  }
}

std::optional<Configuration> find_configuration(const Graph& g, ConfigKind kind) { return scan(g, kind); }

std::optional<Configuration> detect_configuration(const Graph& g) {
  for (ConfigKind k : kAllKinds)
    if (auto c = scan(g, k)) return c;
  return std::nullopt;
}

std::pair<Graph, ReductionStep> apply_reduction(const Graph& g, const Configuration& conf) {
  if (!configuration_holds(g, conf))
    throw StaleConfiguration(kind_name(conf.kind) + " no longer matches the graph");
  ReductionStep step;
  step.conf = conf;
  step.edges_before = g.size();
  const auto& r = conf.roles;
  Graph h;

  auto remove_vertices = [&](std::vector<VertexId> vs) {
    std::set<VertexId> gone(vs.begin(), vs.end());
    for (const Edge& e : g.edges())
      if (gone.count(e.first) || gone.count(e.second)) step.removed_edges.push_back(e);
    step.removed_vertices = vs;
    return delete_vertices(g, vs);
  };
  auto merge = [&](VertexId a, VertexId b, bool contract) {
    step.merged = {a, b};
    auto [m, fresh] = contract ? contract_edge(g, a, b) : identify_vertices(g, a, b);
    step.fresh = fresh;
    return m;
  };

  switch (conf.kind) {
    case ConfigKind::L1a:
      h = remove_vertices({r[0]});
      break;
    case ConfigKind::L1b:
    case ConfigKind::L2:
      step.removed_edges.push_back({std::min(r[0], r[1]), std::max(r[0], r[1])});
      h = delete_edge(g, r[0], r[1]);
      break;
    case ConfigKind::L3:
      h = remove_vertices({r[1], r[2]});
      break;
    case ConfigKind::L4:
      step.removed_edges.push_back({std::min(r[0], r[2]), std::max(r[0], r[2])});
      h = merge(r[0], r[2], true);
      break;
    case ConfigKind::L5:
      h = remove_vertices({r[0], r[1], r[2]});
      break;
    case ConfigKind::L6:
      h = remove_vertices({r[2]});
      break;
    case ConfigKind::L7:
      step.removed_edges.push_back({std::min(r[0], r[1]), std::max(r[0], r[1])});
      h = merge(r[0], r[1], true);
      break;
    case ConfigKind::L8:
      h = remove_vertices({r[0], r[1]});
      break;
    case ConfigKind::L9:
    case ConfigKind::L10: {
      std::size_t k = conf.cycle_length;
      h = remove_vertices(std::vector<VertexId>(r.begin(), r.begin() + static_cast<long>(k)));
      if (conf.kind == ConfigKind::L10 && l10_identifies(g, conf)) {
        step.merged = {r[k], r[k + 2]};
        auto [m, fresh] = identify_vertices(h, r[k], r[k + 2]);
        step.fresh = fresh;
        h = std::move(m);
      }
      break;
    }
  }
  step.edges_after = h.size();
  if (step.edges_after >= step.edges_before)
    throw std::logic_error(kind_name(conf.kind) + " reduction did not remove an edge");
  return {std::move(h), std::move(step)};
}

Graph replay_step(const Graph& g, const ReductionStep& step) {
  auto [h, s] = apply_reduction(g, step.conf);
  if (s.fresh != step.fresh) throw StaleConfiguration("fresh vertex id differs on replay");
  return h;
}

ReductionRun reduce_fully(const Graph& g) {
  ReductionRun run;
  run.graphs.push_back(g);
  while (auto conf = detect_configuration(run.graphs.back())) {
    auto [h, step] = apply_reduction(run.graphs.back(), *conf);
    run.trace.steps.push_back(std::move(step));
    run.graphs.push_back(std::move(h));
  }
  return run;
}

Graph replay(const Graph& original, const ReductionTrace& trace) {
  Graph g = original;
  for (const auto& s : trace.steps) g = replay_step(g, s);
  return g;
}

nlohmann::json configuration_to_json(const Configuration& c) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  j["roles"] = c.roles;
  if (c.cycle_length) j["cycle_length"] = c.cycle_length;
  j["boundary"] = c.boundary;
  return j;
}

nlohmann::json step_to_json(const ReductionStep& s) {
  nlohmann::json j = configuration_to_json(s.conf);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : s.removed_edges) edges.push_back({u, v});
  j["removed_edges"] = edges;
  j["removed_vertices"] = s.removed_vertices;
  if (!s.merged.empty()) j["merged"] = s.merged;
  j["fresh"] = s.fresh ? nlohmann::json(*s.fresh) : nlohmann::json(nullptr);
  j["edges_before"] = s.edges_before;
  j["edges_after"] = s.edges_after;
  return j;
}

nlohmann::json trace_to_json(const ReductionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) steps.push_back(step_to_json(s));
  return {{"steps", steps}};
}

}  // namespace wdc
