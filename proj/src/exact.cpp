#include "wdc/exact.hpp"

#include <algorithm>
#include <numeric>

#include "wdc/verify.hpp"

namespace wdc {

namespace {

// Dense relabeling of a graph: index i in [0, n) <-> ids[i].
struct Dense {
  std::vector<VertexId> ids;
  std::vector<std::vector<int>> adj;

  explicit Dense(const Graph& g, const std::vector<VertexId>& order) : ids(order) {
    std::map<VertexId, int> idx;
    for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
    adj.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (VertexId w : g.neighbors(ids[i])) adj[i].push_back(idx[w]);
  }
  int n() const { return static_cast<int>(ids.size()); }
};

std::vector<VertexId> degree_order(const Graph& g) {
  std::vector<VertexId> order = g.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return order;
}

class WdSearch {
 public:
  WdSearch(const Graph& g, std::size_t k, int colors, Enumeration mode)
      : d_(g, degree_order(g)), colors_(colors), canonical_(mode == Enumeration::canonical) {
    int n = d_.n();
    need_.resize(n);
    for (int i = 0; i < n; ++i)
      need_[i] = static_cast<int>(std::min<std::size_t>(d_.adj[i].size(), k));
    col_.assign(n, 0);
    cnt_.assign(static_cast<std::size_t>(n) * (colors + 1), 0);
    distinct_.assign(n, 0);
    uncolored_.resize(n);
    for (int i = 0; i < n; ++i) uncolored_[i] = static_cast<int>(d_.adj[i].size());
  }

  std::uint64_t run(const std::function<bool(const Coloring&)>& visit) {
    visit_ = &visit;
    for (int i = 0; i < d_.n(); ++i)
      if (need_[i] > colors_) return 0;
    rec(0, 0);
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int& cnt(int v, int c) { return cnt_[static_cast<std::size_t>(v) * (colors_ + 1) + c]; }

  bool assign(int v, int c) {
    col_[v] = c;
    bool ok = true;
    for (int w : d_.adj[v]) {
      --uncolored_[w];
      if (cnt(w, c)++ == 0) ++distinct_[w];
      if (distinct_[w] + uncolored_[w] < need_[w]) ok = false;
    }
    return ok;
  }

  void unassign(int v) {
    int c = col_[v];
    for (int w : d_.adj[v]) {
      ++uncolored_[w];
      if (--cnt(w, c) == 0) --distinct_[w];
    }
    col_[v] = 0;
  }

  // Returns false when the visitor asked to stop.
  bool rec(int i, int max_used) {
    ++nodes_;
    if (i == d_.n()) {
      ++found_;
      Coloring c;
      for (int v = 0; v < d_.n(); ++v) c.set(d_.ids[v], col_[v]);
      return (*visit_)(c);
    }
    int top = canonical_ ? std::min(max_used + 1, colors_) : colors_;
    for (int c = 1; c <= top; ++c) {
      bool ok = assign(i, c);
      bool go_on = true;
      if (ok) go_on = rec(i + 1, std::max(max_used, c));
      unassign(i);
      if (!go_on) return false;
    }
    return true;
  }

  Dense d_;
  int colors_;
  bool canonical_;
  std::vector<int> need_, col_, cnt_, distinct_, uncolored_;
  const std::function<bool(const Coloring&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0, found_ = 0;
};

}  // namespace

std::uint64_t enumerate_weak_dynamic(const Graph& g, std::size_t k, int colors, Enumeration mode,
                                     const std::function<bool(const Coloring&)>& visit) {
  if (colors < 1) throw PreconditionError("palette must have at least one color");
  WdSearch s(g, k, colors, mode);
  return s.run(visit);
}

std::optional<Coloring> find_weak_dynamic_coloring(const Graph& g, std::size_t k, int colors) {
  std::optional<Coloring> out;
  enumerate_weak_dynamic(g, k, colors, Enumeration::canonical, [&](const Coloring& c) {
    out = c;
    return false;
  });
  return out;
}

ExactResult wd_number_exact(const Graph& g, std::size_t k, int max_colors) {
  if (max_colors < 1) throw PreconditionError("max_colors must be at least 1");
  ExactResult r;
  if (g.empty()) {
    r.value = 0;
    return r;
  }
  int lb = 1;
  for (VertexId v : g.vertices())
    lb = std::max(lb, static_cast<int>(std::min<std::size_t>(g.degree(v), k)));
  for (int c = lb; c <= max_colors; ++c) {
    WdSearch s(g, k, c, Enumeration::canonical);
    std::optional<Coloring> hit;
    s.run([&](const Coloring& col) {
      hit = col;
      return false;
    });
    r.nodes += s.nodes();
    if (hit) {
      if (!is_weak_dynamic(g, *hit, k)) throw std::logic_error("wd search produced an invalid witness");
      r.value = c;
      r.witness = *hit;
      return r;
    }
  }
  return r;
}

namespace {

class ProperSearch {
 public:
  ProperSearch(const Graph& g, int k) : d_(g, g.vertices()), k_(k) {
    int n = d_.n();
    col_.assign(n, 0);
    forbid_.assign(static_cast<std::size_t>(n) * (k + 1), 0);
    sat_.assign(n, 0);
  }

  bool run() { return rec(0, 0); }
  std::uint64_t nodes() const { return nodes_; }

  Coloring witness() const {
    Coloring c;
    for (int v = 0; v < d_.n(); ++v) c.set(d_.ids[v], col_[v]);
    return c;
  }

 private:
  int& forbid(int v, int c) { return forbid_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  // DSATUR choice: most distinct neighbor colors, then degree, then id.
  int pick() {
    int best = -1;
    for (int v = 0; v < d_.n(); ++v) {
      if (col_[v]) continue;
      if (best < 0 || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && d_.adj[v].size() > d_.adj[best].size()))
        best = v;
    }
    return best;
  }

  bool rec(int colored, int max_used) {
    ++nodes_;
    if (colored == d_.n()) return true;
    int v = pick();
    int top = std::min(max_used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      if (forbid(v, c)) continue;
      col_[v] = c;
      for (int w : d_.adj[v])
        if (forbid(w, c)++ == 0) ++sat_[w];
      if (rec(colored + 1, std::max(max_used, c))) return true;
      for (int w : d_.adj[v])
        if (--forbid(w, c) == 0) --sat_[w];
      col_[v] = 0;
    }
    return false;
  }

  Dense d_;
  int k_;
  std::vector<int> col_, forbid_, sat_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult chromatic_number_exact(const Graph& g, int ub) {
  if (ub < 1) throw PreconditionError("chromatic bound must be at least 1");
  ExactResult r;
  if (g.empty()) {
    r.value = 0;
    return r;
  }
  int lb = g.size() > 0 ? 2 : 1;
  for (int k = lb; k <= ub; ++k) {
    ProperSearch s(g, k);
    bool ok = s.run();
    r.nodes += s.nodes();
    if (ok) {
      r.value = k;
      r.witness = s.witness();
      if (!is_proper(g, r.witness)) throw std::logic_error("chromatic search produced an improper witness");
      return r;
    }
  }
  return r;
}

std::optional<Coloring> list_color_exact(const Graph& g, const ListAssignment& lists) {
  std::vector<VertexId> ids = g.vertices();
  for (VertexId v : ids)
    if (!lists.has(v)) throw PreconditionError("missing list for vertex " + std::to_string(v));
  Dense d(g, ids);
  int n = d.n();
  std::vector<Color> col(n, 0);

  std::function<bool(int)> rec = [&](int colored) -> bool {
    if (colored == n) return true;
    // Smallest number of remaining options first.
    int best = -1;
    std::vector<Color> best_opts;
    for (int v = 0; v < n; ++v) {
      if (col[v]) continue;
      std::vector<Color> opts;
      for (Color c : lists.list(ids[v])) {
        bool clash = false;
        for (int w : d.adj[v])
          if (col[w] == c) clash = true;
        if (!clash) opts.push_back(c);
      }
      if (best < 0 || opts.size() < best_opts.size()) best = v, best_opts = std::move(opts);
      if (best_opts.empty()) return false;
    }
    for (Color c : best_opts) {
      col[best] = c;
      if (rec(colored + 1)) return true;
    }
    col[best] = 0;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Coloring out;
  for (int v = 0; v < n; ++v) out.set(ids[v], col[v]);
  return out;
}

Coloring product_coloring(const Graph& g, const Coloring& proper, const Coloring& wd, std::size_t k) {
  if (!is_proper(g, proper)) throw PreconditionError("first factor is not a proper coloring");
  if (!is_weak_dynamic(g, wd, k)) throw PreconditionError("second factor is not weak-dynamic");
  Color w = std::max<Color>(1, wd.palette_size());
  Coloring out;
  for (VertexId v : g.vertices()) out.set(v, (proper.at(v) - 1) * w + wd.at(v));
  return out;
}

}  // namespace wdc
