#include <doctest.h>

#include <random>

#include "thvg/compaction.hpp"
#include "thvg/visibility.hpp"

using namespace thvg;

namespace {

constexpr Timestamp kT0 = 1609459200;

PublicationSeries series(std::initializer_list<std::pair<const char*, double>> recs) {
  std::vector<Publication> raw;
  Timestamp t = kT0;
  for (const auto& [src, r] : recs)
    raw.push_back({"m" + std::to_string(raw.size() + 1), src, t++, r});
  return PublicationSeries::normalize(raw);
}

std::size_t weight(const SourceGraph& g, std::string_view from, std::string_view to) {
  const auto a = g.index_of(from), b = g.index_of(to);
  if (!a || !b) return 0;
  for (const auto& e : g.edges())
    if (e.from == *a && e.to == *b) return e.weight;
  return 0;
}

}  // namespace

TEST_CASE("compact: two sources with a dropped self-loop") {
  const auto s = series({{"A", 5}, {"B", 2}, {"A", 1}});
  Config c;
  c.tau = 3;
  const auto mg = build_thvg(s, c);
  REQUIRE(mg.edge_count() == 3);  // 2->1, 3->2, 3->1

  const auto g = compact(mg, c);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(weight(g, "B", "A") == 1);
  CHECK(weight(g, "A", "B") == 1);
  CHECK(g.dropped_self_loops() == 1);

  const auto& a = g.nodes()[*g.index_of("A")];
  CHECK(a.earliest_timestamp == kT0);
  CHECK(a.rating == 5.0);
  CHECK(a.message_count == 2);
}

TEST_CASE("compact: self-loops retained on request") {
  const auto s = series({{"A", 5}, {"B", 2}, {"A", 1}});
  Config c;
  c.tau = 3;
  c.drop_self_loops = false;
  const auto g = compact(build_thvg(s, c), c);
  CHECK(weight(g, "A", "A") == 1);
  CHECK(g.dropped_self_loops() == 0);
  CHECK(g.has_self_loops());
}

TEST_CASE("compact: single source collapses completely") {
  const auto s = series({{"A", 3}, {"A", 1}, {"A", 2}, {"A", 5}});
  Config c;
  c.tau = 4;
  const auto mg = build_thvg(s, c);
  const auto g = compact(mg, c);
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.dropped_self_loops() == mg.edge_count());
}

TEST_CASE("compact: empty graph") {
  const auto g = compact(MessageGraph{});
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("compact: parallel edges merge into a weight") {
  // Two B messages both see the earlier A message.
  const auto s = series({{"A", 9}, {"B", 1}, {"B", 2}});
  const auto g = compact(build_hvg_directed(s));
  CHECK(weight(g, "B", "A") == 2);
}

TEST_CASE("compact: conservation, node count and order independence") {
  std::mt19937_64 rng(99);
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Publication> raw;
    const std::size_t n = 1 + rng() % 50;
    for (std::size_t k = 0; k < n; ++k)
      raw.push_back({"m" + std::to_string(k), names[rng() % 6],
                     kT0 + static_cast<Timestamp>(k), 1.0 + static_cast<double>(rng() % 7)});
    const auto s = PublicationSeries::normalize(raw);
    Config c;
    c.tau = 1 + static_cast<int>(rng() % 6);
    const auto mg = build_thvg(s, c);
    const auto g = compact(mg, c);

    std::size_t total = 0;
    for (const auto& e : g.edges()) {
      CHECK(e.weight >= 1);
      CHECK(e.from != e.to);
      total += e.weight;
    }
    CHECK(total + g.dropped_self_loops() == mg.edge_count());
    CHECK(g.node_count() == s.distinct_sources());

    for (std::size_t k = 1; k < g.edges().size(); ++k) {
      const auto& p = g.edges()[k - 1];
      const auto& q = g.edges()[k];
      CHECK((p.from < q.from || (p.from == q.from && p.to < q.to)));
    }

    // Rebuilding the message graph from shuffled edges gives the same result.
    auto shuffled = mg.edges();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(compact(MessageGraph(mg.nodes(), shuffled), c) == g);
  }
}
