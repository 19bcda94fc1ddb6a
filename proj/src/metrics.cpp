#include "thvg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "thvg/compaction.hpp"
#include "thvg/visibility.hpp"

namespace thvg {
namespace {

// Undirected simple adjacency lists (sorted, no self-loops).
std::vector<std::vector<std::size_t>> undirected_adjacency(
    std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    if (e.from == e.to) continue;
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

std::vector<Edge> plain_edges(const SourceGraph& graph) {
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) edges.push_back({e.from, e.to});
  return edges;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double compacted_density(const PublicationSeries& sub, const Config& config) {
  return network_metrics(compact(build_graph(sub, config), config)).density;
}

double prefix_density(const PublicationSeries& series, const Config& config,
                      std::size_t sources) {
  std::unordered_set<std::string_view> seen;
  std::size_t end = 0;
  for (; end < series.size(); ++end) {
    const auto& id = series[end].source_id;
    if (!seen.contains(id)) {
      if (seen.size() == sources) break;
      seen.insert(id);
    }
  }
  return compacted_density(series.prefix(end), config);
}

double random_subset_density(const PublicationSeries& series,
                             const Config& config,
                             const std::vector<std::string>& all_sources,
                             std::size_t sources, const SweepSpec& spec) {
  double sum = 0.0;
  for (int r = 0; r < spec.repeats; ++r) {
    std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(sources)) +
                        static_cast<std::uint64_t>(r));
    // Partial Fisher-Yates; explicit modulo keeps draws identical across
    // standard library implementations.
    std::vector<std::string> pool = all_sources;
    for (std::size_t k = 0; k < sources; ++k) {
      const std::size_t pick = k + rng() % (pool.size() - k);
      std::swap(pool[k], pool[pick]);
    }
    const std::unordered_set<std::string> chosen(pool.begin(),
                                                 pool.begin() + sources);
    sum += compacted_density(
        series.filter([&](const Publication& p) {
          return chosen.contains(p.source_id);
        }),
        config);
  }
  return sum / spec.repeats;
}

}  // namespace

NetworkMetrics network_metrics(std::size_t n, std::span<const Edge> edges) {
  NetworkMetrics m;
  m.n = n;
  m.directed_edge_count = edges.size();
  const auto adj = undirected_adjacency(n, edges);

  std::size_t degree_sum = 0;
  for (const auto& nb : adj) {
    degree_sum += nb.size();
    ++m.degree_histogram[nb.size()];
  }
  m.v = degree_sum / 2;
  if (n >= 2)
    m.density = 2.0 * static_cast<double>(m.v) /
                (static_cast<double>(n) * static_cast<double>(n - 1));
  if (n >= 1) m.average_degree = 2.0 * static_cast<double>(m.v) / n;

  // Components, then one BFS per node for eccentricities.
  std::vector<std::size_t> component(n, SIZE_MAX);
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] != SIZE_MAX) continue;
    std::vector<std::size_t> queue{s};
    component[s] = m.component_count;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto w : adj[queue[head]])
        if (component[w] == SIZE_MAX) {
          component[w] = m.component_count;
          queue.push_back(w);
        }
    ++m.component_count;
  }

  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (adj[s].empty()) continue;
    queue.assign(1, s);
    dist[s] = 0;
    std::size_t ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      ecc = std::max(ecc, dist[u]);
      for (auto w : adj[u])
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    m.diameter = std::max(m.diameter, ecc);
    for (auto u : queue) dist[u] = SIZE_MAX;
  }
  return m;
}

NetworkMetrics network_metrics(const MessageGraph& graph) {
  return network_metrics(graph.node_count(), graph.edges());
}

NetworkMetrics network_metrics(const SourceGraph& graph) {
  const auto edges = plain_edges(graph);
  return network_metrics(graph.node_count(), edges);
}

std::string_view to_string(Sampling s) {
  return s == Sampling::Prefix ? "prefix" : "random";
}

Sampling parse_sampling(std::string_view s) {
  if (s == "prefix") return Sampling::Prefix;
  if (s == "random" || s == "random_subset") return Sampling::RandomSubset;
  throw ConfigError("unknown sampling '" + std::string(s) + "'");
}

void SweepSpec::validate() const {
  if (sizes.empty()) throw ConfigError("sweep needs at least one size");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 2)
      throw ConfigError("sweep size " + std::to_string(sizes[k]) +
                        " is below 2");
    if (k > 0 && sizes[k] <= sizes[k - 1])
      throw ConfigError("sweep sizes must be strictly increasing");
  }
  if (repeats < 1) throw ConfigError("sweep repeats must be >= 1");
}

std::vector<SweepPoint> density_sweep(const PublicationSeries& series,
                                      const Config& config,
                                      const SweepSpec& spec) {
  spec.validate();
  config.validate();

  std::set<std::string> ids;
  for (const auto& p : series.items()) ids.insert(p.source_id);
  const std::vector<std::string> all_sources(ids.begin(), ids.end());
  for (auto k : spec.sizes)
    if (k > all_sources.size())
      throw ConfigError("sweep size " + std::to_string(k) + " exceeds the " +
                        std::to_string(all_sources.size()) +
                        " distinct sources available");

  std::vector<std::future<double>> jobs;
  jobs.reserve(spec.sizes.size());
  for (auto k : spec.sizes) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      return spec.sampling == Sampling::Prefix
                 ? prefix_density(series, config, k)
                 : random_subset_density(series, config, all_sources, k, spec);
    }));
  }
  std::vector<SweepPoint> out;
  out.reserve(jobs.size());
  for (std::size_t k = 0; k < jobs.size(); ++k)
    out.push_back({spec.sizes[k], jobs[k].get()});
  return out;
}

LogFit fit_log(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [n, d] : points) {
    if (!(n >= 2.0))
      throw ConfigError("fit_log: node count " + std::to_string(n) +
                        " is below 2");
    distinct.insert(n);
  }
  if (distinct.size() < 2)
    throw ConfigError("fit_log needs at least two distinct node counts");

  const double count = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [n, d] : points) {
    mean_x += std::log(n);
    mean_y += d;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [n, d] : points) {
    const double dx = std::log(n) - mean_x;
    const double dy = d - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  LogFit fit;
  fit.points.assign(points.begin(), points.end());
  fit.a = sxy / sxx;
  fit.b = mean_y - fit.a * mean_x;

  double ss_res = 0.0;
  for (const auto& [n, d] : points) {
    const double r = d - fit(n);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

LogFit fit_log(std::span<const SweepPoint> points) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(points.size());
  for (const auto& p : points)
    xy.emplace_back(static_cast<double>(p.n), p.density);
  return fit_log(xy);
}

SourceRanking rank_sources(const SourceGraph& graph) {
  SourceRanking ranking;
  ranking.reserve(graph.node_count());
  for (const auto& s : graph.nodes())
    ranking.push_back({s.source_id, 0, 0, 0, s.earliest_timestamp, s.rating, 0});
  for (const auto& e : graph.edges()) {
    if (e.from == e.to) continue;
    ranking[e.to].in_weight += e.weight;
    ++ranking[e.to].in_degree;
    ++ranking[e.from].out_degree;
  }
  for (auto& r : ranking) r.score = static_cast<double>(r.in_weight);
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedSource& a, const RankedSource& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.earliest_timestamp != b.earliest_timestamp)
                return a.earliest_timestamp < b.earliest_timestamp;
              return a.source_id < b.source_id;
            });
  return ranking;
}

std::vector<std::string> infer_primary(const SourceGraph& graph,
                                       std::size_t top_k) {
  if (top_k < 1) throw ConfigError("top_k must be >= 1");
  auto ranking = rank_sources(graph);
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedSource& a, const RankedSource& b) {
              if (a.in_weight != b.in_weight) return a.in_weight > b.in_weight;
              if (a.out_degree != b.out_degree)
                return a.out_degree < b.out_degree;
              if (a.earliest_timestamp != b.earliest_timestamp)
                return a.earliest_timestamp < b.earliest_timestamp;
              return a.source_id < b.source_id;
            });
  std::vector<std::string> out;
  for (std::size_t k = 0; k < ranking.size() && k < top_k; ++k)
    out.push_back(ranking[k].source_id);
  return out;
}

}  // namespace thvg
