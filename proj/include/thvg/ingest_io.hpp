#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thvg/evaluation.hpp"
#include "thvg/metrics.hpp"
#include "thvg/model.hpp"

namespace thvg {

// Publication ingestion ------------------------------------------------------

enum class InputFormat { Csv, Jsonl };

InputFormat parse_input_format(std::string_view s);

/// A parsed record whose rating may still be missing.
struct RawPublication {
  std::string message_id;
  std::string source_id;
  Timestamp timestamp = 0;
  std::optional<double> rating;
};

enum class RatingMode { Provided, Estimate };

/// Whether ratings come from the input or are estimated from each source's
/// publication volume and rate.
struct RatingPolicy {
  RatingMode mode = RatingMode::Provided;
  double volume_weight = 1.0;
  double rate_weight = 1.0;

  /// Throws ConfigError.
  void validate() const;
};

RatingMode parse_rating_mode(std::string_view s);
std::string_view to_string(RatingMode m);

/// Integer epoch seconds, or ISO-8601 `YYYY-MM-DD[THH:MM[:SS[.fff]]][Z|+HH:MM]`
/// (a space may replace the `T`; fractional seconds are truncated).
/// Returns nullopt for anything else.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// True for ids matching [A-Za-z0-9._-]+.
bool valid_source_id(std::string_view id);

/// Reads CSV (`timestamp,source_id,rating[,message_id]`, optional header
/// naming the columns in any order) or JSON Lines with the same keys.
/// Blank lines are skipped. A missing message_id becomes
/// `<source_id>#<line_number>`. A missing rating is an error unless
/// `policy.mode` is Estimate. Throws ParseError with the 1-based line number.
std::vector<RawPublication> parse_publications(std::istream& in,
                                               InputFormat format,
                                               const RatingPolicy& policy = {});

/// Per source: raw = volume_weight * ln(1 + count) + rate_weight * count /
/// span_days, where span_days is the timestamp span of the whole input.
/// Raw scores are min-max scaled to [1, 100]; if all are equal every source
/// gets 50. Input order is preserved and any provided rating is replaced.
/// Throws ConfigError when the span is zero.
std::vector<Publication> estimate_ratings(std::span<const RawPublication> raw,
                                          const RatingPolicy& policy);

/// Applies `policy`: Provided requires every rating to be present (throws
/// ValidationError naming the record), Estimate calls estimate_ratings.
std::vector<Publication> resolve_ratings(std::span<const RawPublication> raw,
                                         const RatingPolicy& policy);

// Graph interchange ----------------------------------------------------------

enum class GraphFormat { Dot, GraphMl, EdgeCsv, AdjJson };

GraphFormat parse_graph_format(std::string_view s);
std::string_view to_string(GraphFormat f);

using AnyGraph = std::variant<MessageGraph, SourceGraph>;

/// Deterministic serialization. Adjacency JSON stores the 0/1 matrix with
/// row = edge source (later node) and column = edge target (earlier node).
std::string export_graph(const MessageGraph& graph, GraphFormat format);
std::string export_graph(const SourceGraph& graph, GraphFormat format);
std::string export_graph(const AnyGraph& graph, GraphFormat format);

struct ImportOptions {
  /// Accept self-loops (a nonzero diagonal) even if the document does not
  /// declare them.
  bool allow_self_loops = false;
};

/// Inverse of export_graph for AdjJson and EdgeCsv. Throws ParseError naming
/// the offending field or line, ValidationError for graph invariant
/// violations, ConfigError for formats that cannot be imported.
AnyGraph import_graph(std::string_view text, GraphFormat format,
                      const ImportOptions& options = {});

SourceGraph import_source_graph(std::string_view text, GraphFormat format,
                                const ImportOptions& options = {});
MessageGraph import_message_graph(std::string_view text, GraphFormat format,
                                  const ImportOptions& options = {});

// Auxiliary tables ------------------------------------------------------------

/// CSV with columns `from_source,to_source` (header optional). Duplicate rows
/// collapse. Throws ParseError.
EdgeSet read_edge_set(std::istream& in, bool allow_self_pairs = false);
std::string write_edge_set(const EdgeSet& edges);

/// `n,D` table, densities with six decimals.
std::string write_sweep_csv(std::span<const SweepPoint> points);

}  // namespace thvg
