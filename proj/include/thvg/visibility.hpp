#pragma once

#include <span>
#include <utility>
#include <vector>

#include "thvg/model.hpp"

namespace thvg {

/// Undirected horizontal visibility links over `values`, as (i, j) pairs with
/// i < j, sorted. Nodes i and j see each other iff every value strictly
/// between them is strictly lower than both endpoints. Linear time.
std::vector<std::pair<std::size_t, std::size_t>> hvg_links(
    std::span<const double> values);

/// Undirected HVG; each link is stored in both directions.
MessageGraph build_hvg_undirected(const PublicationSeries& series);

/// HVG with every link {i, j}, i < j, oriented as j -> i (later looks back at
/// the earlier node).
MessageGraph build_hvg_directed(const PublicationSeries& series);

/// Temporal HVG.
///
/// Method::Thvg: directed HVG plus an edge j -> i for every earlier node i
/// inside the window whose rating strictly exceeds the rating of j.
/// Method::Eq1Only: only the window/dominance edges, without visibility.
/// Method::Hvg: same as build_hvg_directed.
///
/// The window is j - i < tau for TauUnit::Index, and
/// t_j - t_i < time_window_seconds for TauUnit::Seconds. Throws ConfigError.
MessageGraph build_thvg(const PublicationSeries& series, const Config& config);

/// Dispatches on config.method.
MessageGraph build_graph(const PublicationSeries& series, const Config& config);

}  // namespace thvg
