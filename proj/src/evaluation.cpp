#include "thvg/evaluation.hpp"

namespace thvg {

bool EdgeSet::insert(std::string from, std::string to) {
  if (from == to && !allow_self_pairs_)
    throw ValidationError("self-pair '" + from + "' in edge set");
  return pairs_.emplace(std::move(from), std::move(to)).second;
}

EdgeSet EdgeSet::undirected() const {
  EdgeSet out(allow_self_pairs_);
  for (const auto& [a, b] : pairs_) {
    if (a <= b)
      out.insert(a, b);
    else
      out.insert(b, a);
  }
  return out;
}

EdgeSet edge_set(const SourceGraph& graph) {
  EdgeSet out;
  const auto& nodes = graph.nodes();
  for (const auto& e : graph.edges())
    if (e.from != e.to) out.insert(nodes[e.from].source_id, nodes[e.to].source_id);
  return out;
}

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

EvalReport evaluate(const EdgeSet& predicted, const EdgeSet& gold,
                    bool undirected) {
  if (undirected) return evaluate(predicted.undirected(), gold.undirected());

  EvalReport r;
  for (const auto& p : predicted.pairs()) {
    if (gold.contains(p))
      ++r.tp;
    else
      ++r.fp;
  }
  r.fn = gold.size() - r.tp;

  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  r.precision = ratio(r.tp, r.tp + r.fp);
  r.recall = ratio(r.tp, r.tp + r.fn);
  r.f_measure = f_measure(r.precision, r.recall);
  return r;
}

}  // namespace thvg
