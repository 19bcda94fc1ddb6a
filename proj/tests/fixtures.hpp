#pragma once

#include <random>
#include <string>
#include <vector>

#include "thvg/model.hpp"

namespace thvg::testing {

/// The published 7-node adjacency matrix: row = later node, column = earlier.
inline const std::vector<std::vector<int>> kMatrix7 = {
    {0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 0},
};

/// kMatrix7 as a source graph with ids "1".."7".
inline SourceGraph matrix7_graph() {
  std::vector<SourceNode> nodes;
  for (int k = 1; k <= 7; ++k) nodes.push_back({std::to_string(k), 0, 1.0, 1});
  std::vector<WeightedEdge> edges;
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c)
      if (kMatrix7[r][c]) edges.push_back({r, c, 1});
  return SourceGraph(nodes, edges);
}

/// `messages` publications one second apart from `sources` sources; each
/// source has a fixed random rating in [1, 100).
inline PublicationSeries random_corpus(std::mt19937_64& rng, std::size_t messages,
                                       std::size_t sources) {
  std::vector<double> rating(sources);
  for (auto& r : rating) r = 1.0 + static_cast<double>(rng() % 99000) / 1000.0;
  std::vector<Publication> raw;
  raw.reserve(messages);
  for (std::size_t k = 0; k < messages; ++k) {
    const std::size_t s = rng() % sources;
    raw.push_back({"m" + std::to_string(k), "src" + std::to_string(s),
                   1609459200 + static_cast<Timestamp>(k), rating[s]});
  }
  return PublicationSeries::normalize(std::move(raw));
}

}  // namespace thvg::testing
