#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thvg/error.hpp"

namespace thvg {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

/// One rated, timestamped message.
struct Publication {
  std::string message_id;
  std::string source_id;
  Timestamp timestamp = 0;
  double rating = 0.0;

  friend bool operator==(const Publication&, const Publication&) = default;
};

/// Plausible timestamp range accepted by normalization. Defaults to the
/// calendar years 1990 through 2100 inclusive.
struct TimeRange {
  Timestamp min = 631152000;   // 1990-01-01T00:00:00Z
  Timestamp max = 4133980799;  // 2100-12-31T23:59:59Z
};

/// Throws ValidationError if the record is unusable (empty ids, rating not
/// positive and finite, timestamp out of range).
void validate_publication(const Publication& p, const TimeRange& range = {});

/// Time-ordered publication stream. Node index i (0-based here) is the
/// position in this order.
///
/// Order is timestamp ascending; equal timestamps keep their input order, and
/// source_id breaks any remaining tie. Message ids are unique.
class PublicationSeries {
 public:
  PublicationSeries() = default;

  /// Validates every record, rejects duplicate message ids and sorts.
  static PublicationSeries normalize(std::vector<Publication> raw,
                                     const TimeRange& range = {});

  /// Keeps the records for which `keep` returns true, preserving order.
  template <typename Pred>
  PublicationSeries filter(Pred keep) const {
    PublicationSeries out;
    for (const auto& p : items_)
      if (keep(p)) out.items_.push_back(p);
    return out;
  }

  /// First `count` records.
  PublicationSeries prefix(std::size_t count) const;

  const std::vector<Publication>& items() const noexcept { return items_; }
  const Publication& operator[](std::size_t i) const { return items_[i]; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  std::vector<double> ratings() const;
  std::size_t distinct_sources() const;

  friend bool operator==(const PublicationSeries&,
                         const PublicationSeries&) = default;

 private:
  std::vector<Publication> items_;
};

/// Series built directly from ratings with synthetic ids and strictly
/// increasing timestamps. Each record gets its own source ("s0", "s1", ...)
/// unless `sources` is given.
PublicationSeries series_from_ratings(
    const std::vector<double>& ratings,
    const std::vector<std::string>& sources = {});

enum class Method { Hvg, Thvg, Eq1Only };
enum class TauUnit { Index, Seconds };

std::string_view to_string(Method m);
std::string_view to_string(TauUnit u);
Method parse_method(std::string_view s);
TauUnit parse_tau_unit(std::string_view s);

/// Construction parameters.
///
/// `tau` is the node-index window of the dominance rule: an earlier node i is
/// considered for node j when j - i < tau. With TauUnit::Seconds the window is
/// measured in wall-clock seconds via `time_window_seconds` instead.
struct Config {
  int tau = 1;
  Method method = Method::Thvg;
  TauUnit tau_unit = TauUnit::Index;
  bool drop_self_loops = true;
  std::optional<std::int64_t> time_window_seconds;

  /// Throws ConfigError.
  void validate() const;
};

/// Directed edge between node indices. For message graphs `from` is the
/// later node and `to` the earlier one.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct NodeMeta {
  std::string message_id;
  std::string source_id;
  Timestamp timestamp = 0;
  double rating = 0.0;

  friend bool operator==(const NodeMeta&, const NodeMeta&) = default;
};

/// Message-level visibility graph.
///
/// A Backward graph stores each link once as (later -> earlier). A Symmetric
/// graph (undirected HVG) stores every link in both directions. The boolean
/// adjacency view uses row = later node, column = earlier node, so
/// a[j][i] == 1 iff edge j -> i exists.
class MessageGraph {
 public:
  enum class Orientation { Backward, Symmetric };

  MessageGraph() = default;

  /// Sorts and deduplicates `edges`, then checks every invariant. Throws
  /// ValidationError.
  MessageGraph(std::vector<NodeMeta> nodes, std::vector<Edge> edges,
               Orientation orientation = Orientation::Backward);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<NodeMeta>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Orientation orientation() const noexcept { return orientation_; }

  bool has_edge(std::size_t from, std::size_t to) const;
  std::vector<std::vector<std::uint8_t>> adjacency() const;

  /// Set when the window was measured in seconds rather than node indices.
  bool time_window_extension() const noexcept { return time_window_; }
  void set_time_window_extension(bool on) noexcept { time_window_ = on; }

  friend bool operator==(const MessageGraph&, const MessageGraph&) = default;

 private:
  std::vector<NodeMeta> nodes_;
  std::vector<Edge> edges_;
  Orientation orientation_ = Orientation::Backward;
  bool time_window_ = false;
};

struct SourceNode {
  std::string source_id;
  Timestamp earliest_timestamp = 0;
  double rating = 0.0;
  std::size_t message_count = 0;

  friend bool operator==(const SourceNode&, const SourceNode&) = default;
};

struct WeightedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t weight = 1;

  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Compacted source-influence network. Nodes are kept sorted by source_id,
/// edges sorted by (from, to); at most one edge per ordered pair.
class SourceGraph {
 public:
  SourceGraph() = default;

  /// Sorts nodes by id (remapping edge endpoints), merges parallel edges by
  /// summing their weights and validates. Self-loops are rejected unless
  /// `allow_self_loops`. Throws ValidationError.
  SourceGraph(std::vector<SourceNode> nodes, std::vector<WeightedEdge> edges,
              bool allow_self_loops = false);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<SourceNode>& nodes() const noexcept { return nodes_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(std::string_view source_id) const;
  bool has_edge(std::size_t from, std::size_t to) const;
  bool has_self_loops() const;
  std::vector<std::vector<std::uint8_t>> adjacency() const;

  /// Message-level self-loop multiplicity discarded during compaction.
  std::size_t dropped_self_loops() const noexcept { return dropped_; }
  void set_dropped_self_loops(std::size_t n) noexcept { dropped_ = n; }

  friend bool operator==(const SourceGraph&, const SourceGraph&) = default;

 private:
  std::vector<SourceNode> nodes_;
  std::vector<WeightedEdge> edges_;
  std::size_t dropped_ = 0;
};

struct NetworkMetrics {
  std::size_t n = 0;
  std::size_t v = 0;  // undirected links
  std::size_t directed_edge_count = 0;
  double density = 0.0;
  double average_degree = 0.0;
  std::size_t diameter = 0;
  std::size_t component_count = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
};

/// D = a * ln(n) + b.
struct LogFit {
  double a = 0.0;
  double b = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;

  double operator()(double n) const;
};

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

}  // namespace thvg
