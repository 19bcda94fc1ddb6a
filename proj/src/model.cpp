#include "thvg/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

namespace thvg {

void validate_publication(const Publication& p, const TimeRange& range) {
  if (p.message_id.empty())
    throw ValidationError("publication with empty message_id");
  if (p.source_id.empty())
    throw ValidationError("publication '" + p.message_id +
                          "' has empty source_id");
  if (!std::isfinite(p.rating) || p.rating <= 0.0)
    throw ValidationError("publication '" + p.message_id +
                          "' has nonpositive or non-finite rating");
  if (p.timestamp < range.min || p.timestamp > range.max)
    throw ValidationError("publication '" + p.message_id +
                          "' has timestamp " + std::to_string(p.timestamp) +
                          " outside the plausible range");
}

PublicationSeries PublicationSeries::normalize(std::vector<Publication> raw,
                                               const TimeRange& range) {
  std::unordered_set<std::string> seen;
  seen.reserve(raw.size());
  for (const auto& p : raw) {
    validate_publication(p, range);
    if (!seen.insert(p.message_id).second)
      throw ValidationError("duplicate message_id '" + p.message_id + "'");
  }

  // Input order is already a total order, so a stable sort on timestamp
  // realizes (timestamp, input order, source_id).
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Publication& a, const Publication& b) {
                     return a.timestamp < b.timestamp;
                   });

  PublicationSeries out;
  out.items_ = std::move(raw);
  return out;
}

PublicationSeries PublicationSeries::prefix(std::size_t count) const {
  PublicationSeries out;
  count = std::min(count, items_.size());
  out.items_.assign(items_.begin(),
                    items_.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

std::vector<double> PublicationSeries::ratings() const {
  std::vector<double> r;
  r.reserve(items_.size());
  for (const auto& p : items_) r.push_back(p.rating);
  return r;
}

std::size_t PublicationSeries::distinct_sources() const {
  std::set<std::string_view> ids;
  for (const auto& p : items_) ids.insert(p.source_id);
  return ids.size();
}

PublicationSeries series_from_ratings(const std::vector<double>& ratings,
                                      const std::vector<std::string>& sources) {
  if (!sources.empty() && sources.size() != ratings.size())
    throw ConfigError("series_from_ratings: sources and ratings differ in size");
  std::vector<Publication> raw;
  raw.reserve(ratings.size());
  const TimeRange range;
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    Publication p;
    p.message_id = "m" + std::to_string(i);
    p.source_id = sources.empty() ? "s" + std::to_string(i) : sources[i];
    p.timestamp = range.min + static_cast<Timestamp>(i);
    p.rating = ratings[i];
    raw.push_back(std::move(p));
  }
  return PublicationSeries::normalize(std::move(raw));
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Hvg: return "hvg";
    case Method::Thvg: return "thvg";
    case Method::Eq1Only: return "eq1";
  }
  return "?";
}

std::string_view to_string(TauUnit u) {
  return u == TauUnit::Index ? "index" : "seconds";
}

Method parse_method(std::string_view s) {
  if (s == "hvg") return Method::Hvg;
  if (s == "thvg") return Method::Thvg;
  if (s == "eq1" || s == "eq1_only") return Method::Eq1Only;
  throw ConfigError("unknown method '" + std::string(s) + "'");
}

TauUnit parse_tau_unit(std::string_view s) {
  if (s == "index") return TauUnit::Index;
  if (s == "seconds") return TauUnit::Seconds;
  throw ConfigError("unknown tau unit '" + std::string(s) + "'");
}

void Config::validate() const {
  if (tau < 1) throw ConfigError("tau must be >= 1");
  if (tau_unit == TauUnit::Seconds) {
    if (!time_window_seconds)
      throw ConfigError("tau unit 'seconds' requires a time window");
    if (*time_window_seconds <= 0)
      throw ConfigError("time window must be a positive number of seconds");
  }
}

// MessageGraph ---------------------------------------------------------------

MessageGraph::MessageGraph(std::vector<NodeMeta> nodes, std::vector<Edge> edges,
                           Orientation orientation)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      orientation_(orientation) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  const std::size_t n = nodes_.size();
  for (const auto& e : edges_) {
    if (e.from >= n || e.to >= n)
      throw ValidationError("edge " + std::to_string(e.from) + "->" +
                            std::to_string(e.to) + " references a missing node");
    if (e.from == e.to)
      throw ValidationError("self-loop on node " + std::to_string(e.from));
    if (orientation_ == Orientation::Backward && e.to > e.from)
      throw ValidationError("edge " + std::to_string(e.from) + "->" +
                            std::to_string(e.to) + " points forward in time");
    if (orientation_ == Orientation::Symmetric && !has_edge(e.to, e.from))
      throw ValidationError("symmetric graph is missing the reverse of " +
                            std::to_string(e.from) + "->" +
                            std::to_string(e.to));
  }
}

bool MessageGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

std::vector<std::vector<std::uint8_t>> MessageGraph::adjacency() const {
  std::vector<std::vector<std::uint8_t>> a(
      nodes_.size(), std::vector<std::uint8_t>(nodes_.size(), 0));
  for (const auto& e : edges_) a[e.from][e.to] = 1;
  return a;
}

// SourceGraph ----------------------------------------------------------------

SourceGraph::SourceGraph(std::vector<SourceNode> nodes,
                         std::vector<WeightedEdge> edges,
                         bool allow_self_loops) {
  const std::size_t n = nodes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return nodes[a].source_id < nodes[b].source_id;
  });
  std::vector<std::size_t> new_index(n);
  nodes_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    new_index[order[k]] = k;
    nodes_.push_back(std::move(nodes[order[k]]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (nodes_[k].source_id.empty())
      throw ValidationError("source node with empty id");
    if (k > 0 && nodes_[k].source_id == nodes_[k - 1].source_id)
      throw ValidationError("duplicate source '" + nodes_[k].source_id + "'");
  }

  for (auto& e : edges) {
    if (e.from >= n || e.to >= n)
      throw ValidationError("source edge references a missing node");
    if (e.weight == 0) throw ValidationError("source edge with zero weight");
    e.from = new_index[e.from];
    e.to = new_index[e.to];
    if (e.from == e.to && !allow_self_loops)
      throw ValidationError("self-loop on source '" +
                            nodes_[e.from].source_id + "'");
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().from == e.from &&
        edges_.back().to == e.to)
      edges_.back().weight += e.weight;
    else
      edges_.push_back(e);
  }
}

std::optional<std::size_t> SourceGraph::index_of(
    std::string_view source_id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), source_id,
      [](const SourceNode& n, std::string_view id) { return n.source_id < id; });
  if (it == nodes_.end() || it->source_id != source_id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool SourceGraph::has_edge(std::size_t from, std::size_t to) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(),
                             WeightedEdge{from, to, 0});
  return it != edges_.end() && it->from == from && it->to == to;
}

bool SourceGraph::has_self_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const WeightedEdge& e) { return e.from == e.to; });
}

std::vector<std::vector<std::uint8_t>> SourceGraph::adjacency() const {
  std::vector<std::vector<std::uint8_t>> a(
      nodes_.size(), std::vector<std::uint8_t>(nodes_.size(), 0));
  for (const auto& e : edges_) a[e.from][e.to] = 1;
  return a;
}

double LogFit::operator()(double n) const { return a * std::log(n) + b; }

}  // namespace thvg
