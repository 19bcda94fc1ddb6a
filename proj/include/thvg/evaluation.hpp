#pragma once

#include <set>
#include <string>
#include <utility>

#include "thvg/model.hpp"

namespace thvg {

/// Set of directed (from_source, to_source) pairs.
class EdgeSet {
 public:
  using Pair = std::pair<std::string, std::string>;

  explicit EdgeSet(bool allow_self_pairs = false)
      : allow_self_pairs_(allow_self_pairs) {}

  /// Returns false if the pair was already present. Throws ValidationError
  /// on a self-pair unless permitted.
  bool insert(std::string from, std::string to);

  const std::set<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(const Pair& p) const { return pairs_.contains(p); }
  bool allows_self_pairs() const noexcept { return allow_self_pairs_; }

  /// Each pair with its endpoints in ascending order.
  EdgeSet undirected() const;

 private:
  std::set<Pair> pairs_;
  bool allow_self_pairs_;
};

/// Cross-source edges of a compacted graph, by source id.
EdgeSet edge_set(const SourceGraph& graph);

/// Harmonic mean of precision and recall, 0 when both are 0.
double f_measure(double precision, double recall);

/// Edge-level precision, recall and F-measure of `predicted` against `gold`.
/// With `undirected`, A->B and B->A count as the same link.
EvalReport evaluate(const EdgeSet& predicted, const EdgeSet& gold,
                    bool undirected = false);

}  // namespace thvg
