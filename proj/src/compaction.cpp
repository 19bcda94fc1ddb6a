#include "thvg/compaction.hpp"

#include <algorithm>
#include <map>

namespace thvg {

SourceGraph compact(const MessageGraph& graph, const Config& config) {
  std::map<std::string, std::size_t> index;
  std::vector<SourceNode> nodes;
  std::vector<std::size_t> source_of(graph.node_count());

  const auto& meta = graph.nodes();
  for (std::size_t k = 0; k < meta.size(); ++k) {
    auto [it, inserted] = index.try_emplace(meta[k].source_id, nodes.size());
    if (inserted) {
      nodes.push_back({meta[k].source_id, meta[k].timestamp, meta[k].rating, 0});
    }
    SourceNode& s = nodes[it->second];
    s.earliest_timestamp = std::min(s.earliest_timestamp, meta[k].timestamp);
    s.rating = std::max(s.rating, meta[k].rating);
    ++s.message_count;
    source_of[k] = it->second;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> weights;
  std::size_t dropped = 0;
  for (const auto& e : graph.edges()) {
    const std::size_t a = source_of[e.from];
    const std::size_t b = source_of[e.to];
    if (a == b && config.drop_self_loops) {
      ++dropped;
      continue;
    }
    ++weights[{a, b}];
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(weights.size());
  for (const auto& [pair, w] : weights) edges.push_back({pair.first, pair.second, w});

  SourceGraph out(std::move(nodes), std::move(edges), !config.drop_self_loops);
  out.set_dropped_self_loops(dropped);
  return out;
}

}  // namespace thvg
