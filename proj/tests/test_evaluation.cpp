#include <doctest.h>

#include <algorithm>
#include <random>

#include "thvg/evaluation.hpp"

using namespace thvg;

namespace {

EdgeSet make(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  EdgeSet s;
  for (const auto& [a, b] : pairs) s.insert(a, b);
  return s;
}

}  // namespace

TEST_CASE("f_measure reproduces the published table rows") {
  CHECK(std::abs(f_measure(0.714, 0.968) - 0.822) <= 0.001);
  CHECK(std::abs(f_measure(0.635, 0.873) - 0.735) <= 0.001);
  CHECK(f_measure(0.0, 0.0) == 0.0);
}

TEST_CASE("evaluate from counts") {
  // tp = 968, fn = 32, fp = 388: precision 0.7139, recall 0.968.
  EdgeSet gold, predicted;
  for (int k = 0; k < 1000; ++k) gold.insert("g" + std::to_string(k), "hub");
  for (int k = 0; k < 968; ++k) predicted.insert("g" + std::to_string(k), "hub");
  for (int k = 0; k < 388; ++k) predicted.insert("f" + std::to_string(k), "hub");
  const auto r = evaluate(predicted, gold);
  CHECK(r.tp == 968);
  CHECK(r.fp == 388);
  CHECK(r.fn == 32);
  CHECK(r.recall == doctest::Approx(0.968));
  CHECK(std::abs(r.precision - 0.714) <= 0.001);
  CHECK(std::abs(r.f_measure - 0.822) <= 0.001);
}

TEST_CASE("evaluate edge cases") {
  const auto g = make({{"a", "b"}, {"b", "c"}});
  SUBCASE("perfect prediction") {
    const auto r = evaluate(g, g);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == 1.0);
    CHECK(r.f_measure == 1.0);
  }
  SUBCASE("both empty") {
    const auto r = evaluate(EdgeSet{}, EdgeSet{});
    CHECK(r.tp == 0);
    CHECK(r.fp == 0);
    CHECK(r.fn == 0);
    CHECK(r.precision == 0.0);
    CHECK(r.recall == 0.0);
    CHECK(r.f_measure == 0.0);
  }
  SUBCASE("direction matters unless undirected") {
    const auto reversed = make({{"b", "a"}, {"c", "b"}});
    CHECK(evaluate(reversed, g).tp == 0);
    const auto r = evaluate(reversed, g, true);
    CHECK(r.tp == 2);
    CHECK(r.f_measure == 1.0);
  }
  SUBCASE("self-pairs need permission") {
    EdgeSet strict;
    CHECK_THROWS_AS(strict.insert("a", "a"), ValidationError);
    EdgeSet lax(true);
    CHECK(lax.insert("a", "a"));
    CHECK_FALSE(lax.insert("a", "a"));
  }
}

TEST_CASE("evaluate properties") {
  std::mt19937_64 rng(12);
  const char* ids[] = {"a", "b", "c", "d", "e"};
  auto random_set = [&] {
    EdgeSet s;
    for (int k = 0, m = static_cast<int>(rng() % 12); k < m; ++k) {
      const auto x = ids[rng() % 5], y = ids[rng() % 5];
      if (std::string(x) != y) s.insert(x, y);
    }
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_set(), b = random_set();
    const auto r = evaluate(a, b);
    CHECK(r.fp == evaluate(b, a).fn);
    CHECK(r.tp + r.fp == a.size());
    CHECK(r.tp + r.fn == b.size());
    if (r.precision + r.recall > 0) {
      CHECK(r.f_measure >= std::min(r.precision, r.recall) - 1e-15);
      CHECK(r.f_measure <= std::max(r.precision, r.recall) + 1e-15);
      if (r.precision == r.recall) CHECK(r.f_measure == doctest::Approx(r.precision));
    }
  }
}
