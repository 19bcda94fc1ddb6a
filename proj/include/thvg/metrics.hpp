#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thvg/model.hpp"

namespace thvg {

/// Structural metrics on the undirected projection of a directed graph.
///
/// v counts unordered linked pairs (a reciprocal pair counts once, self-loops
/// are ignored). density = 2v / (n(n-1)) for n >= 2 and 0 otherwise. The
/// diameter is the largest finite shortest-path distance, taken over all
/// connected components.
NetworkMetrics network_metrics(std::size_t n, std::span<const Edge> edges);
NetworkMetrics network_metrics(const MessageGraph& graph);
NetworkMetrics network_metrics(const SourceGraph& graph);

enum class Sampling { Prefix, RandomSubset };

std::string_view to_string(Sampling s);
Sampling parse_sampling(std::string_view s);

/// How the density-versus-size curve is sampled. Sizes are source counts.
struct SweepSpec {
  std::vector<std::size_t> sizes;
  Sampling sampling = Sampling::Prefix;
  std::uint64_t seed = 0;
  int repeats = 1;

  /// Throws ConfigError.
  void validate() const;
};

struct SweepPoint {
  std::size_t n = 0;
  double density = 0.0;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

/// Density of the compacted network as a function of the number of sources.
///
/// Prefix: for each size k, the longest temporal prefix of `series` that
/// contains exactly k distinct sources. RandomSubset: k sources drawn
/// uniformly without replacement (seeded per size and repeat), the series
/// restricted to them; densities averaged over `repeats`.
///
/// Sizes are evaluated concurrently; the result does not depend on thread
/// scheduling. Throws ConfigError when a size exceeds the number of distinct
/// sources.
std::vector<SweepPoint> density_sweep(const PublicationSeries& series,
                                      const Config& config,
                                      const SweepSpec& spec);

/// Least-squares fit of D = a ln(n) + b. Requires at least two distinct n and
/// every n >= 2; throws ConfigError otherwise.
LogFit fit_log(std::span<const std::pair<double, double>> points);
LogFit fit_log(std::span<const SweepPoint> points);

struct RankedSource {
  std::string source_id;
  std::size_t in_weight = 0;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  Timestamp earliest_timestamp = 0;
  double rating = 0.0;
  double score = 0.0;
};

using SourceRanking = std::vector<RankedSource>;

/// Score = sum of incoming edge weights. Sorted by score descending, then
/// earliest timestamp, then source id. Self-loops do not count.
SourceRanking rank_sources(const SourceGraph& graph);

/// Primary-source heuristic: top_k sources by in_weight descending, then
/// out_degree ascending, earliest timestamp ascending, source id.
std::vector<std::string> infer_primary(const SourceGraph& graph,
                                       std::size_t top_k);

}  // namespace thvg
