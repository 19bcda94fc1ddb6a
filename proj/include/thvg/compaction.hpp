#pragma once

#include "thvg/model.hpp"

namespace thvg {

/// Merges all message nodes of each source into one source node.
///
/// Each source node carries the earliest timestamp, the maximum rating and
/// the number of messages of that source. Message edge j -> i becomes
/// source(j) -> source(i); parallel edges merge and their count becomes the
/// weight. Same-source edges are dropped when config.drop_self_loops is set
/// (their multiplicity is recorded in dropped_self_loops()), otherwise they
/// form a single weighted self-loop.
///
/// A symmetric (undirected HVG) input contributes both directions.
SourceGraph compact(const MessageGraph& graph, const Config& config = {});

}  // namespace thvg
