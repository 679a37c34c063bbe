#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <string>

#include "wdc/certify.hpp"
#include "wdc/exact.hpp"
#include "wdc/generators.hpp"
#include "wdc/graph_io.hpp"
#include "wdc/pipeline.hpp"
#include "wdc/reductions.hpp"
#include "wdc/verify.hpp"

using namespace wdc;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, verification = 2, internal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// key=value pairs for `gen --random`.
std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + it + "'");
    out[it.substr(0, eq)] = it.substr(eq + 1);
  }
  return out;
}

json bare_colors(const Coloring& c) { return coloring_to_json(c)["colors"]; }

int cmd_gen(const std::string& name, const std::vector<std::string>& random, const std::string& format) {
  Graph g;
  json meta;
  if (!name.empty()) {
    try {
      g = named_graph(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    meta["name"] = name;
  } else {
    auto kv = parse_pairs(random);
    std::size_t n = 10;
    double density = 0.5;
    std::uint64_t seed = 1;
    try {
      if (kv.count("n")) n = std::stoul(kv["n"]);
      if (kv.count("density")) density = std::stod(kv["density"]);
      if (kv.count("seed")) seed = std::stoull(kv["seed"]);
    } catch (const std::exception&) {
      throw UsageError("bad value in --random");
    }
    if (n < 1) throw UsageError("n must be positive");
    g = random_planar(n, density, seed);
    meta = {{"n", n}, {"density", density}, {"seed", seed}};
  }
  if (format == "dimacs") {
    std::cout << "c " << meta.dump() << "\n" << to_dimacs(g);
  } else {
    json j = graph_to_json(g);
    j["generator"] = meta;
    std::cout << j.dump() << "\n";
  }
  return ok;
}

int cmd_verify(std::size_t k, const std::string& gpath, const std::string& cpath) {
  Graph g = load_graph(gpath);
  Coloring c = load_coloring(cpath);
  auto rep = check_weak_dynamic(g, c, k);
  json out{{"valid", rep.valid}, {"k", k}, {"violations", json::array()}};
  for (const auto& v : rep.violations)
    out["violations"].push_back({{"vertex", v.vertex}, {"seen", v.seen}, {"required", v.required}});
  std::cout << out.dump() << "\n";
  if (!rep.valid) {
    std::cerr << format_violations(rep);
    return verification;
  }
  return ok;
}

int cmd_solve(std::size_t k, int max_colors, const std::string& gpath) {
  Graph g = load_graph(gpath);
  ExactResult r = wd_number_exact(g, k, max_colors);
  json out;
  out["wd"] = r.value ? json(*r.value) : json(nullptr);
  out["coloring"] = r.value ? bare_colors(r.witness) : json(nullptr);
  out["k"] = k;
  out["max_colors"] = max_colors;
  out["nodes"] = r.nodes;
  std::cout << out.dump() << "\n";
  return ok;
}

int cmd_color(const std::string& gpath, const std::string& trace_out) {
  Graph g = load_graph(gpath);
  ColoringRun run;
  try {
    run = wd3_color_planar_detailed(g);
  } catch (const NonPlanarInput& e) {
    throw UsageError(e.what());
  }
  json out = coloring_to_json(run.coloring);
  out["palette"] = run.coloring.distinct_colors();
  out["steps"] = run.trace.steps.size();
  out["base_route"] = run.base_route;
  out["fallbacks"] = run.fallbacks;
  std::cout << out.dump() << "\n";
  if (!trace_out.empty()) {
    std::ofstream f(trace_out);
    if (!f) throw UsageError("cannot write " + trace_out);
    f << trace_to_json(run.trace).dump(2) << "\n";
  }
  return ok;
}

int cmd_reduce(const std::string& gpath) {
  Graph g = load_graph(gpath);
  ReductionRun run = reduce_fully(g);
  json out;
  out["trace"] = trace_to_json(run.trace);
  const Graph& base = run.graphs.back();
  out["remaining"] = {{"vertices", base.vertices()}, {"edges", json::array()}};
  for (auto [u, v] : base.edges()) out["remaining"]["edges"].push_back({u, v});
  std::cout << out.dump() << "\n";
  return ok;
}

int cmd_check(const std::string& kind, std::size_t budget, std::uint64_t seed) {
  std::vector<ConfigKind> kinds;
  if (kind == "all") {
    kinds.assign(kAllKinds.begin(), kAllKinds.end());
  } else {
    auto k = parse_kind(kind);
    if (!k) throw UsageError("unknown configuration kind: " + kind);
    kinds.push_back(*k);
  }
  CertifyOptions opt;
  opt.budget = budget;
  opt.seed = seed;
  json reports = json::array();
  bool passed = true;
  for (ConfigKind k : kinds) {
    CertificateReport r = certify_lemma(k, opt);
    passed = passed && r.passed();
    reports.push_back(report_to_json(r));
    std::cerr << kind_name(k) << ": " << r.hosts << " hosts, " << r.colorings << " colorings, "
              << r.lift_failures << " failures\n";
  }
  std::cout << (reports.size() == 1 ? reports[0] : reports).dump() << "\n";
  return passed ? ok : verification;
}

int cmd_bench(const std::string& suite, std::uint64_t seed) {
  if (suite != "small") throw UsageError("unknown suite: " + suite);
  std::vector<std::pair<std::string, Graph>> cases;
  for (const char* name : {"c5", "k4", "k4_subdivided", "cube", "fig7a", "fig7b"})
    cases.emplace_back(name, named_graph(name));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10; ++i) {
    std::uint64_t s = rng();
    std::size_t n = 6 + static_cast<std::size_t>(i);
    cases.emplace_back("random_n" + std::to_string(n) + "_s" + std::to_string(s), random_planar(n, 0.6, s));
  }
  std::cout << "# seed=" << seed << "\n";
  std::cout << "name,n,m,wd3_exact,pipeline_colors,micros\n";
  for (const auto& [name, g] : cases) {
    ExactResult ex = wd_number_exact(g, 3, 6);
    auto t0 = std::chrono::steady_clock::now();
    Coloring c = wd3_color_planar(g);
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << ',' << g.order() << ',' << g.size() << ','
              << (ex.value ? std::to_string(*ex.value) : "") << ',' << c.distinct_colors() << ',' << us << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak dynamic coloring toolkit"};
  app.require_subcommand(1);

  std::string name, format = "json";
  std::vector<std::string> random;
  auto* gen = app.add_subcommand("gen", "emit a named or random planar graph");
  auto* gen_name = gen->add_option("--name", name, "named graph");
  auto* gen_random = gen->add_option("--random", random, "n=<int> density=<float> seed=<int>");
  gen_name->excludes(gen_random);
  gen->add_option("--format", format, "json or dimacs")->check(CLI::IsMember({"json", "dimacs"}));

  std::size_t k = 3;
  int max_colors = 6;
  std::string gpath, cpath, trace_out;
  auto* verify = app.add_subcommand("verify", "check a k-weak-dynamic coloring");
  verify->add_option("--k", k)->check(CLI::PositiveNumber);
  verify->add_option("graph", gpath)->required();
  verify->add_option("coloring", cpath)->required();

  auto* solve = app.add_subcommand("solve", "exact wd_k");
  solve->add_option("--k", k)->check(CLI::PositiveNumber);
  solve->add_option("--max-colors", max_colors)->check(CLI::PositiveNumber);
  solve->add_option("graph", gpath)->required();

  auto* color = app.add_subcommand("color", "3-weak-dynamic coloring of a planar graph with at most six colors");
  color->add_option("graph", gpath)->required();
  color->add_option("--trace-out", trace_out, "write the reduction trace here");

  auto* reduce = app.add_subcommand("reduce", "apply reductions until none is left");
  reduce->add_flag("--trace", "emit the trace (always on)");
  reduce->add_option("graph", gpath)->required();

  std::string kind = "all";
  std::size_t budget = 20;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check-lemmas", "certify configuration lifts");
  check->add_option("--kind", kind, "configuration kind or 'all'");
  check->add_option("--budget", budget)->check(CLI::PositiveNumber);
  check->add_option("--seed", seed);

  std::string suite = "small";
  auto* bench = app.add_subcommand("bench", "benchmark suite as CSV");
  bench->add_option("--suite", suite);
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*gen) {
      if (name.empty() && random.empty()) throw UsageError("gen needs --name or --random");
      return cmd_gen(name, random, format);
    }
    if (*verify) return cmd_verify(k, gpath, cpath);
    if (*solve) return cmd_solve(k, max_colors, gpath);
    if (*color) return cmd_color(gpath, trace_out);
    if (*reduce) return cmd_reduce(gpath);
    if (*check) return cmd_check(kind, budget, seed);
    if (*bench) return cmd_bench(suite, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
