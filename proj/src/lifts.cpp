#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "wdc/list_coloring.hpp"
#include "wdc/reductions.hpp"
#include "wdc/verify.hpp"

namespace wdc {

namespace {

std::string join(const std::set<Color>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : s) os << (first ? "" : ",") << c, first = false;
  os << '}';
  return os.str();
}

struct Dependency {
  Graph d;
  ListAssignment lists;
  std::map<VertexId, std::set<Color>> restricted;
};

class Lift {
 public:
  Lift(const Graph& g, const ReductionStep& step, const Coloring& reduced) : g_(g), step_(step) {
    for (const auto& [v, col] : reduced.entries())
      if (g.has_vertex(v)) c_.set(v, col);
    if (step.fresh && !step.merged.empty()) {
      Color m = reduced.at(*step.fresh);
      for (VertexId v : step.merged) c_.set(v, m);
    }
  }

  LiftReport run() {
    switch (step_.conf.kind) {
      case ConfigKind::L1a: l1a(); break;
      case ConfigKind::L1b: l1b(); break;
      case ConfigKind::L2: label_ = "identity"; break;
      case ConfigKind::L3: l3(); break;
      case ConfigKind::L4: l4(); break;
      case ConfigKind::L5: l5(); break;
      case ConfigKind::L6: l6(); break;
      case ConfigKind::L7: l7(); break;
      case ConfigKind::L8: l8(); break;
      case ConfigKind::L9: cycle(true); break;
      case ConfigKind::L10: cycle(false); break;
    }
    if (!c_.is_total_on(g_)) fail("some vertex was left uncolored");
    if (c_.palette_size() > kLiftPalette) fail("palette exceeds six colors");
    auto report = check_weak_dynamic(g_, c_, 3);
    if (!report) fail("result is not 3-weak-dynamic: " + format_violations(report));
    rep_.coloring = c_;
    rep_.case_label = label_;
    return rep_;
  }

 private:
  VertexId r(std::size_t i) const { return step_.conf.roles.at(i); }

  Color col(VertexId v) const {
    auto x = c_.get(v);
    if (!x) fail("vertex " + std::to_string(v) + " is unexpectedly uncolored");
    return *x;
  }

  // Colors y must avoid so that x sees min(d(x), 3) colors once y is colored.
  std::set<Color> satisfy(VertexId x, VertexId y) const {
    std::set<Color> seen;
    for (VertexId w : g_.neighbors(x))
      if (w != y)
        if (auto cw = c_.get(w)) seen.insert(*cw);
    if (seen.size() >= std::min<std::size_t>(g_.degree(x), 3)) return {};
    return seen;
  }

  std::set<Color> colors_of_vertices(const std::vector<VertexId>& vs) const {
    std::set<Color> out;
    for (VertexId v : vs) out.insert(col(v));
    return out;
  }

  std::vector<VertexId> nbrs_except(VertexId v, std::initializer_list<VertexId> excl) const {
    std::vector<VertexId> out;
    for (VertexId w : g_.neighbors(v))
      if (std::find(excl.begin(), excl.end(), w) == excl.end()) out.push_back(w);
    return out;
  }

  void record(VertexId v, const std::string& role, std::size_t n, std::size_t bound) {
    rep_.restrictions.push_back({v, role, n, bound});
    if (n > bound)
      fail(role + " has " + std::to_string(n) + " restrictions, bound " + std::to_string(bound));
  }

  Color choose(VertexId v, const std::set<Color>& avoid, std::size_t bound, const std::string& role) {
    record(v, role, avoid.size(), bound);
    for (Color k = 1; k <= kLiftPalette; ++k)
      if (!avoid.count(k)) {
        c_.set(v, k);
        return k;
      }
    fail("no color left for " + role + " avoiding " + join(avoid));
  }

  void put(VertexId v, Color k) { c_.set(v, k); }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << kind_name(step_.conf.kind) << " lift failed";
    if (!label_.empty()) os << " (case " << label_ << ")";
    os << ": " << why << "; roles";
    for (VertexId v : step_.conf.roles) {
      os << ' ' << v << '=';
      if (auto cv = c_.get(v)) os << *cv;
      else os << '-';
    }
    os << "; boundary";
    for (VertexId v : step_.conf.boundary) {
      os << ' ' << v << '=';
      if (auto cv = c_.get(v)) os << *cv;
      else os << '-';
    }
    throw LiftFailure(os.str());
  }

  static std::set<Color> unite(std::initializer_list<std::set<Color>> parts) {
    std::set<Color> out;
    for (const auto& p : parts) out.insert(p.begin(), p.end());
    return out;
  }

  std::set<Color> satisfy_all(VertexId y, const std::vector<VertexId>& xs) const {
    std::set<Color> out;
    for (VertexId x : xs) {
      auto s = satisfy(x, y);
      out.insert(s.begin(), s.end());
    }
    return out;
  }

  // ---- L1 ----
  void l1a() {
    label_ = "degree1";
    choose(r(0), satisfy(r(1), r(0)), 2, "u");
  }

  void l1b() {
    VertexId v1 = r(0), v2 = r(1), u1 = r(2);
    label_ = g_.degree(v2) == 3 ? "3-neighbor" : "2-neighbor";
    c_.erase(v1);
    c_.erase(v2);
    choose(v1, unite({satisfy(v2, v1), satisfy(u1, v1)}), 4, "v1");
    choose(v2, unite({satisfy(v1, v2), satisfy_all(v2, nbrs_except(v2, {v1}))}), 5, "v2");
  }

  // ---- L3: path v1 v2 v3 v4 ----
  void l3() {
    VertexId v1 = r(0), v2 = r(1), v3 = r(2), v4 = r(3), v5 = r(4), v6 = r(5);
    label_ = "4334";
    c_.erase(v5);
    c_.erase(v6);
    choose(v5, unite({{col(v1)}, satisfy_all(v5, nbrs_except(v5, {v2}))}), 5, "v5");
    choose(v6, unite({{col(v4)}, satisfy_all(v6, nbrs_except(v6, {v3}))}), 5, "v6");
    choose(v2, unite({{col(v4), col(v6)}, satisfy(v5, v2), satisfy(v1, v2)}), 4, "v2");
    choose(v3, unite({{col(v1), col(v5)}, satisfy(v6, v3), satisfy(v4, v3)}), 4, "v3");
  }

  // ---- L4: triangles v1v2v3 and v1v3v4 ----
  void l4() {
    VertexId v1 = r(0), v2 = r(1), v3 = r(2), v4 = r(3);
    c_.erase(v1);
    c_.erase(v3);
    if (g_.degree(v2) >= 4 && g_.degree(v4) >= 4) {
      label_ = "both-4plus";
      std::set<Color> base{col(v2), col(v4)};
      choose(v1, unite({base, satisfy(v2, v1)}), 4, "v1");
      choose(v3, unite({base, satisfy(v4, v3)}), 4, "v3");
      return;
    }
    label_ = "3-vertex-apex";
    VertexId p = g_.degree(v2) <= 3 ? v2 : v4;
    VertexId q = p == v2 ? v4 : v2;
    std::set<Color> base{col(p), col(q)};
    choose(v3, unite({base, satisfy(p, v3), satisfy(q, v3)}), 5, "v3");
    choose(v1, unite({base, {col(v3)}, satisfy(p, v1), satisfy(q, v1)}), 5, "v1");
  }

  // ---- L5: 3-regular triangle ----
  void l5() {
    std::array<VertexId, 3> v{r(0), r(1), r(2)}, o{r(3), r(4), r(5)};
    int apex = -1;
    for (int i = 0; i < 3 && apex < 0; ++i)
      if (g_.degree(o[i]) >= 4) apex = i;
    if (apex >= 0) {
      label_ = "4plus-neighbor";
      std::rotate(v.begin(), v.begin() + apex, v.end());
      std::rotate(o.begin(), o.begin() + apex, o.end());
      // o[0] keeps its three colors from the reduced graph.
      choose(v[1], unite({{col(o[0]), col(o[2])}, satisfy(o[1], v[1])}), 4, "v2");
      choose(v[2], unite({{col(v[1]), col(o[0]), col(o[1])}, satisfy(o[2], v[2])}), 5, "v3");
      choose(v[0], unite({{col(v[1]), col(v[2]), col(o[0]), col(o[1]), col(o[2])}, satisfy(o[0], v[0])}), 5,
             "v1");
      return;
    }
    label_ = "all-3-neighbors";
    for (VertexId x : o) c_.erase(x);
    std::vector<VertexId> s{v[0], v[1], v[2], o[0], o[1], o[2]};
    auto dep = build(s);
    for (std::size_t i = 0; i < 6; ++i)
      record(s[i], i < 3 ? "v" + std::to_string(i + 1) : "v'" + std::to_string(i - 2),
             dep.restricted[s[i]].size(), i < 3 ? 2 : 4);
    solve(dep, s, {});
  }

  // ---- L6: triangles v1v2v3, v1v3v4 around a 4+ vertex ----
  void l6() {
    VertexId v1 = r(0), v2 = r(1), v3 = r(2), v4 = r(3), v5 = r(4), v6 = r(5);
    label_ = "triangle-pair";
    c_.erase(v2);
    c_.erase(v4);
    auto rest = nbrs_except(v1, {v2, v3, v4});
    if (rest.empty()) fail("v1 has no neighbor outside the configuration");
    Color c5 = col(rest.front());
    choose(v2, unite({{col(v1), c5}, satisfy(v5, v2)}), 4, "v2");
    choose(v3, {col(v1), col(v2), col(v5), col(v6), c5}, 5, "v3");
    choose(v4, unite({{col(v1), col(v2)}, satisfy(v6, v4)}), 4, "v4");
  }

  // ---- L7: triangle with a degree-4 apex ----
  void l7() {
    VertexId v1 = r(0), v2 = r(1), v3 = r(2), v4 = r(3), v5 = r(4), v6 = r(5), v7 = r(6);
    c_.erase(v1);
    c_.erase(v2);
    Color a = col(v4), d = col(v5), e = col(v3), f = col(v6), gg = col(v7);
    std::set<Color> x = colors_of_vertices(nbrs_except(v4, {v1}));
    std::set<Color> y = colors_of_vertices(nbrs_except(v5, {v2}));

    std::set<Color> left = unite({x, {f, gg, e, d}});
    if (left.size() < 6) {
      label_ = "1";
      choose(v1, left, 5, "v1");
      choose(v2, unite({y, {e, a}}), 4, "v2");
      return;
    }
    std::set<Color> right = unite({y, {f, gg, e, a}});
    if (right.size() < 6) {
      label_ = "2";
      choose(v2, right, 5, "v2");
      choose(v1, unite({x, {e, d}}), 4, "v1");
      return;
    }
    // Both sides use all six colors: x = {a, b}, y = {d, b}.
    std::set<Color> xb = x, yb = y;
    xb.erase(a);
    yb.erase(d);
    if (x.size() != 2 || y.size() != 2 || xb.size() != 1 || xb != yb)
      fail("unexpected color pattern around v4 and v5");
    Color b = *xb.begin();
    auto avail = [&](VertexId w, VertexId skip, Color old) {
      std::set<Color> avoid = unite({{old}, satisfy_all(w, nbrs_except(w, {skip}))});
      std::set<Color> out;
      for (Color k = 1; k <= kLiftPalette; ++k)
        if (!avoid.count(k)) out.insert(k);
      return std::pair{avoid, out};
    };
    auto pick_not = [](const std::set<Color>& s, Color bad) -> std::optional<Color> {
      for (Color k : s)
        if (k != bad) return k;
      return std::nullopt;
    };

    auto [avoid4, avail4] = avail(v4, v1, a);
    record(v4, "v4", avoid4.size(), 5);
    if (auto k = pick_not(avail4, e)) {
      label_ = "3a";
      put(v4, *k);
      put(v2, a);
      choose(v1, {a, b, d, e}, 4, "v1");
      return;
    }
    auto [avoid5, avail5] = avail(v5, v2, d);
    record(v5, "v5", avoid5.size(), 5);
    if (auto k = pick_not(avail5, e)) {
      label_ = "3b";
      put(v5, *k);
      put(v1, d);
      choose(v2, {d, b, a, e}, 4, "v2");
      return;
    }
    if (!avail4.count(e)) fail("v4 has no admissible recolor");
    put(v4, e);
    auto [avoid5b, avail5b] = avail(v5, v2, d);
    if (!avail5b.count(e)) fail("v5 cannot take the apex color once v4 has it");
    put(v5, e);
    Color n3 = choose(v3, unite({{e}, satisfy(v6, v3), satisfy(v7, v3)}), 5, "v3");
    if (n3 != d) {
      label_ = "3c-i";
      put(v1, d);
      std::set<Color> opts{a, f, gg};
      opts.erase(n3);
      put(v2, *opts.begin());
    } else {
      label_ = "3c-ii";
      put(v1, f);
      put(v2, a);
    }
  }

  // ---- L8: triangle with a 5+ apex ----
  void l8() {
    VertexId v1 = r(0), v2 = r(1), v3 = r(2), v4 = r(3), v5 = r(4);
    label_ = "5plus-apex";
    c_.erase(v4);
    c_.erase(v5);
    choose(v4, unite({{col(v3)}, satisfy_all(v4, nbrs_except(v4, {v1}))}), 5, "v4");
    choose(v5, unite({{col(v3)}, satisfy_all(v5, nbrs_except(v5, {v2}))}), 5, "v5");
    choose(v1, unite({{col(v3), col(v5)}, colors_of_vertices(nbrs_except(v4, {v1}))}), 4, "v1");
    choose(v2, unite({{col(v3), col(v4)}, colors_of_vertices(nbrs_except(v5, {v2}))}), 4, "v2");
  }

  // ---- dependency graph on a recolored set S ----
  //
  // Every vertex x touching S must end up seeing min(d(x), 3) colors. With F
  // the fixed colors around x and T its neighbors in S, either F already
  // suffices, or members of T avoid F, or T members must differ pairwise.
  Dependency build(const std::vector<VertexId>& s) const {
    std::set<VertexId> in(s.begin(), s.end());
    Dependency dep;
    for (VertexId v : s) {
      dep.d.add_vertex(v);
      dep.restricted[v];
    }
    std::set<VertexId> sources(s.begin(), s.end());
    for (VertexId v : s)
      for (VertexId w : g_.neighbors(v)) sources.insert(w);
    for (VertexId x : sources) {
      std::vector<VertexId> t;
      std::set<Color> f;
      for (VertexId w : g_.neighbors(x)) {
        if (in.count(w)) t.push_back(w);
        else f.insert(col(w));
      }
      if (t.empty()) continue;
      std::size_t need = std::min<std::size_t>(g_.degree(x), 3);
      if (f.size() >= need) continue;
      std::sort(t.begin(), t.end(), [&](VertexId p, VertexId q) {
        return std::find(s.begin(), s.end(), p) < std::find(s.begin(), s.end(), q);
      });
      if (t.size() == 1) {
        if (f.size() + 1 < need) fail("vertex " + std::to_string(x) + " cannot reach " + std::to_string(need) +
                                      " colors");
        dep.restricted[t[0]].insert(f.begin(), f.end());
      } else if (t.size() == 2) {
        if (f.size() + 2 < need) fail("vertex " + std::to_string(x) + " cannot be satisfied");
        for (VertexId w : t) dep.restricted[w].insert(f.begin(), f.end());
        if (f.size() + 2 == need) dep.d.add_edge(t[0], t[1]);
      } else {
        dep.d.add_edge(t[0], t[1]);
        dep.d.add_edge(t[0], t[2]);
        dep.d.add_edge(t[1], t[2]);
      }
    }
    for (VertexId v : s) {
      std::set<Color> rr = dep.restricted[v];
      dep.lists.set(v, complement_palette(rr, kLiftPalette));
    }
    return dep;
  }

  void solve(const Dependency& dep, const std::vector<VertexId>& s, const PerturbationHook& hook) {
    try {
      auto res = color_dependency_graph(dep.d, dep.lists, hook);
      for (VertexId v : s) put(v, res.coloring.at(v));
      rep_.list_routes = res.routes;
      rep_.perturbations = res.perturbations;
    } catch (const ListColoringError& ex) {
      fail(std::string("dependency graph not colorable: ") + ex.what());
    }
  }

  // ---- L9 / L10: chordless cycle of 3-vertices ----
  void cycle(bool free_pattern) {
    std::size_t k = step_.conf.cycle_length;
    std::vector<VertexId> s(step_.conf.roles.begin(), step_.conf.roles.begin() + static_cast<long>(k));
    std::vector<VertexId> outer(step_.conf.roles.begin() + static_cast<long>(k), step_.conf.roles.end());
    std::set<VertexId> on(s.begin(), s.end());
    auto host_nbrs = [&](VertexId v) {
      std::vector<VertexId> out;
      for (VertexId w : g_.neighbors(v))
        if (!on.count(w)) out.push_back(w);
      return out;
    };

    std::string base = free_pattern ? "free" : "plain";
    if (!free_pattern && step_.fresh) {
      base = "identified";
      // An identified vertex seeing a single color gets a second one by
      // recoloring a low-degree neighbor.
      for (VertexId p : step_.merged) {
        auto nb = host_nbrs(p);
        if (nb.empty() || colors_of_vertices(nb).size() != 1) continue;
        VertexId x = 0;
        for (VertexId w : nb)
          if (g_.degree(w) <= 3 && std::find(step_.merged.begin(), step_.merged.end(), w) == step_.merged.end()) {
            x = w;
            break;
          }
        if (!x) fail("identified vertex " + std::to_string(p) + " has no recolorable neighbor");
        std::set<Color> avoid{col(x)};
        for (VertexId y : host_nbrs(x))
          if (std::find(step_.merged.begin(), step_.merged.end(), y) == step_.merged.end()) {
            auto sy = satisfy(y, x);
            avoid.insert(sy.begin(), sy.end());
          }
        choose(x, avoid, 5, "neighbor of identified " + std::to_string(p));
        base = "identified+recolor";
      }
    }

    std::set<std::size_t> perturbed;
    PerturbationHook hook = [&](const std::vector<VertexId>& stuck) -> std::optional<DependencyProblem> {
      std::set<VertexId> st(stuck.begin(), stuck.end());
      for (std::size_t j = 0; j < k; ++j) {
        VertexId o = outer[j];
        if (perturbed.count(j) || g_.degree(o) != 3) continue;
        if (std::count(outer.begin(), outer.end(), o) != 1) continue;
        if (std::find(step_.merged.begin(), step_.merged.end(), o) != step_.merged.end()) continue;
        if (!st.count(s[(j + 1) % k]) && !st.count(s[(j + k - 1) % k])) continue;
        perturbed.insert(j);
        std::set<Color> avoid{col(o)};
        for (VertexId y : host_nbrs(o)) {
          auto sy = satisfy(y, o);
          avoid.insert(sy.begin(), sy.end());
        }
        choose(o, avoid, 5, "v'" + std::to_string(j + 1) + " perturbation");
        auto dep = build(s);
        return DependencyProblem{dep.d, dep.lists};
      }
      return std::nullopt;
    };

    auto dep = build(s);
    for (std::size_t i = 0; i < k; ++i)
      record(s[i], "v" + std::to_string(i + 1), dep.restricted[s[i]].size() + dep.d.degree(s[i]), 6);
    solve(dep, s, hook);
    label_ = base + (rep_.perturbations ? "/perturbed" : "");
  }

  const Graph& g_;
  const ReductionStep& step_;
  Coloring c_;
  LiftReport rep_;
  std::string label_;
};

}  // namespace

LiftReport lift_coloring_detailed(const Graph& g, const ReductionStep& step, const Coloring& reduced) {
  Graph h = replay_step(g, step);
  if (!reduced.is_total_on(h)) throw PreconditionError("reduced coloring is not total on the reduced graph");
  if (reduced.palette_size() > kLiftPalette) throw PreconditionError("reduced coloring uses more than six colors");
  if (!is_weak_dynamic(h, reduced, 3)) throw PreconditionError("reduced coloring is not 3-weak-dynamic");
  Lift lift(g, step, reduced);
  return lift.run();
}

Coloring lift_coloring(const Graph& g, const ReductionStep& step, const Coloring& reduced) {
  return lift_coloring_detailed(g, step, reduced).coloring;
}

}  // namespace wdc
