#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdc/graph.hpp"
#include "wdc/reductions.hpp"

namespace wdc {

// Produces a planar host whose first detected configuration has the target
// kind, or nullopt when the attempt did not produce one.
using HostGenerator = std::function<std::optional<Graph>(std::mt19937_64&)>;

// Mixes three sources: intermediate graphs of full reduction runs over
// several random planar families, a mutation hill-climb toward the kind, and
// small random moves around the previous host that keep the kind first. For
// L10 the moves start from a fixed host until a fresh one turns up.
HostGenerator default_host_generator(ConfigKind kind);

struct CertifyOptions {
  std::size_t budget = 20;
  std::uint64_t seed = 1;
  // Reduced graphs up to this order get every coloring enumerated. Larger
  // ones are skipped when exhaustive_only is set, and otherwise sampled up
  // to max_colorings canonical colorings.
  std::size_t exhaustive_vertices = 8;
  bool exhaustive_only = true;
  std::uint64_t max_colorings = 300000;
  // Generator calls allowed per requested host.
  std::size_t attempts_per_host = 400;
};

struct Counterexample {
  Graph host;
  ReductionStep step;
  Coloring reduced;
  std::string message;
};

struct CertificateReport {
  ConfigKind kind{};
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t hosts = 0;
  std::size_t exhaustive_hosts = 0;
  std::size_t generator_failures = 0;
  std::uint64_t colorings = 0;
  std::uint64_t lift_failures = 0;
  std::map<std::string, std::uint64_t> case_hits;
  std::vector<Counterexample> counterexamples;  // first few only
  double seconds = 0;
  bool passed() const { return hosts >= budget && lift_failures == 0; }
};

// Lifts every 3-weak-dynamic 6-coloring of each host's reduced graph.
CertificateReport certify_lemma(ConfigKind kind, const HostGenerator& gen, const CertifyOptions& opt);
CertificateReport certify_lemma(ConfigKind kind, const CertifyOptions& opt);

nlohmann::json report_to_json(const CertificateReport& r);

}  // namespace wdc
