#include "thvg/visibility.hpp"

#include <algorithm>

namespace thvg {
namespace {

std::vector<NodeMeta> node_meta(const PublicationSeries& series) {
  std::vector<NodeMeta> meta;
  meta.reserve(series.size());
  for (const auto& p : series.items())
    meta.push_back({p.message_id, p.source_id, p.timestamp, p.rating});
  return meta;
}

std::vector<Edge> directed_hvg_edges(const PublicationSeries& series) {
  const auto ratings = series.ratings();
  const auto links = hvg_links(ratings);
  std::vector<Edge> edges;
  edges.reserve(links.size());
  for (const auto& [i, j] : links) edges.push_back({j, i});
  return edges;
}

// Appends j -> i for every i inside the window of j with rating_i > rating_j.
void append_dominance_edges(const PublicationSeries& series,
                            const Config& config, std::vector<Edge>& edges) {
  const auto& items = series.items();
  const std::size_t n = items.size();
  for (std::size_t j = 1; j < n; ++j) {
    const double rj = items[j].rating;
    for (std::size_t i = j; i-- > 0;) {
      if (config.tau_unit == TauUnit::Index) {
        if (j - i >= static_cast<std::size_t>(config.tau)) break;
      } else if (items[j].timestamp - items[i].timestamp >=
                 *config.time_window_seconds) {
        break;
      }
      if (items[i].rating > rj) edges.push_back({j, i});
    }
  }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> hvg_links(
    std::span<const double> values) {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  if (values.size() < 2) return links;
  links.reserve(2 * values.size());

  // Stack of indices with strictly decreasing values: the nodes still
  // visible from the right.
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double x = values[j];
    while (!stack.empty() && values[stack.back()] < x) {
      links.emplace_back(stack.back(), j);
      stack.pop_back();
    }
    if (!stack.empty()) {
      links.emplace_back(stack.back(), j);
      // An equal value is seen by j but hidden from everything after j.
      if (values[stack.back()] == x) stack.pop_back();
    }
    stack.push_back(j);
  }
  std::sort(links.begin(), links.end());
  return links;
}

MessageGraph build_hvg_undirected(const PublicationSeries& series) {
  const auto ratings = series.ratings();
  const auto links = hvg_links(ratings);
  std::vector<Edge> edges;
  edges.reserve(2 * links.size());
  for (const auto& [i, j] : links) {
    edges.push_back({i, j});
    edges.push_back({j, i});
  }
  return MessageGraph(node_meta(series), std::move(edges),
                      MessageGraph::Orientation::Symmetric);
}

MessageGraph build_hvg_directed(const PublicationSeries& series) {
  return MessageGraph(node_meta(series), directed_hvg_edges(series));
}

MessageGraph build_thvg(const PublicationSeries& series, const Config& config) {
  config.validate();
  if (config.method == Method::Hvg) return build_hvg_directed(series);

  std::vector<Edge> edges;
  if (config.method == Method::Thvg) edges = directed_hvg_edges(series);
  append_dominance_edges(series, config, edges);

  MessageGraph g(node_meta(series), std::move(edges));
  g.set_time_window_extension(config.tau_unit == TauUnit::Seconds);
  return g;
}

MessageGraph build_graph(const PublicationSeries& series, const Config& config) {
  return build_thvg(series, config);
}

}  // namespace thvg
