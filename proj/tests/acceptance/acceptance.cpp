// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "thvg/compaction.hpp"
#include "thvg/evaluation.hpp"
#include "thvg/ingest_io.hpp"
#include "thvg/metrics.hpp"
#include "thvg/visibility.hpp"

using namespace thvg;
using thvg::testing::CliSandbox;
using thvg::testing::fixture;
using thvg::testing::slurp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects the first few failure messages of a criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) detail_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? ", " : "") << s; }
  bool ok() const { return failures_ == 0; }
  std::string text() const {
    return ok() ? notes_.str() : std::to_string(failures_) + " failure(s): " + detail_.str();
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream detail_, notes_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

oracle::EdgeSet as_set(const MessageGraph& g) {
  oracle::EdgeSet s;
  for (const auto& e : g.edges()) s.insert({e.from, e.to});
  return s;
}

Config make_config(Method m, int tau) {
  Config c;
  c.method = m;
  c.tau = tau;
  return c;
}

// 1 -------------------------------------------------------------------------
void f_measure_table(Outcome& o) {
  struct Row { double p, r, f; };
  for (const auto& row : {Row{0.714, 0.968, 0.822}, Row{0.635, 0.873, 0.735}}) {
    const double f = f_measure(row.p, row.r);
    o.note(fmt("F=%.4f", f));
    o.expect(std::abs(f - row.f) <= 0.001, "F(" + fmt("%.3f", row.p) + ") = " + fmt("%.6f", f));
  }
  // The same arithmetic through evaluate() on a constructed prediction.
  EdgeSet gold, pred;
  for (int k = 0; k < 31; ++k) gold.insert("g" + std::to_string(k), "h");
  for (int k = 0; k < 30; ++k) pred.insert("g" + std::to_string(k), "h");
  for (int k = 0; k < 12; ++k) pred.insert("x" + std::to_string(k), "h");
  const auto rep = evaluate(pred, gold);
  o.expect(std::abs(rep.f_measure - f_measure(rep.precision, rep.recall)) < 1e-12,
           "evaluate disagrees with f_measure");
}

// 2 -------------------------------------------------------------------------
void matrix7_fixture(Outcome& o) {
  const auto g = import_source_graph(slurp(fixture("matrix7_adjacency.json")), GraphFormat::AdjJson);
  const auto m = network_metrics(g);
  o.expect(m.n == 7, "n = " + std::to_string(m.n));
  o.expect(m.directed_edge_count == 8, "edges = " + std::to_string(m.directed_edge_count));
  o.expect(std::abs(m.density - 0.381) <= 0.001, "density = " + fmt("%.6f", m.density));
  const auto ranking = rank_sources(g);
  o.expect(!ranking.empty() && ranking[0].source_id == "1" && ranking[0].in_degree == 3,
           "top in-degree node mismatch");
  o.note("density " + fmt("%.6f", m.density));
}

// 3 -------------------------------------------------------------------------
void iid_degree_law(Outcome& o) {
  constexpr std::size_t n = 100000;
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);

  const auto t0 = Clock::now();
  const auto g = build_hvg_undirected(series_from_ratings(x));
  const double elapsed = seconds_since(t0);

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : g.edges()) ++degree[e.from];  // symmetric storage
  std::vector<std::size_t> hist(64, 0);
  double total = 0;
  for (auto d : degree) {
    total += static_cast<double>(d);
    ++hist[std::min<std::size_t>(d, 63)];
  }
  const double mean = total / n;
  o.expect(std::abs(mean - 4.0) <= 0.05, "mean degree " + fmt("%.4f", mean));
  double worst = 0;
  for (int k = 2; k <= 10; ++k) {
    const double expected = std::pow(2.0 / 3.0, k - 2) / 3.0;
    const double got = static_cast<double>(hist[k]) / n;
    worst = std::max(worst, std::abs(got - expected));
  }
  o.expect(worst <= 0.01, "max |P(k) - law| = " + fmt("%.4f", worst));
  o.expect(elapsed < 5.0, "build took " + fmt("%.2f", elapsed) + " s");
  o.note("mean degree " + fmt("%.4f", mean) + ", max dev " + fmt("%.4f", worst) + ", build " +
         fmt("%.3f", elapsed) + " s");
}

// 4 -------------------------------------------------------------------------
void oracle_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  auto check = [&](const std::vector<double>& x) {
    const auto s = series_from_ratings(x);
    ++cases;
    o.expect(as_set(build_hvg_directed(s)) == oracle::hvg_directed(x), "HVG directed");
    o.expect(as_set(build_thvg(s, make_config(Method::Hvg, 1))) == oracle::hvg_directed(x),
             "HVG via config");
    oracle::EdgeSet und;
    for (const auto& [i, j] : oracle::hvg_pairs(x)) und.insert({i, j}), und.insert({j, i});
    o.expect(as_set(build_hvg_undirected(s)) == und, "HVG undirected");
    for (int tau : {1, 2, 3, 8}) {
      o.expect(as_set(build_thvg(s, make_config(Method::Thvg, tau))) == oracle::thvg(x, tau),
               "THVG tau=" + std::to_string(tau));
      o.expect(as_set(build_thvg(s, make_config(Method::Eq1Only, tau))) ==
                   oracle::dominance(x, tau),
               "EQ1 tau=" + std::to_string(tau));
    }
  };

  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& x : oracle::all_series(len, 4)) check(x);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t len = 1 + rng() % 64;
    std::vector<double> x(len);
    // Alternate between heavy-tie and continuous value distributions.
    const int alphabet = (k % 2) ? 3 + static_cast<int>(rng() % 5) : 0;
    for (auto& v : x)
      v = alphabet ? static_cast<double>(1 + rng() % alphabet)
                   : std::uniform_real_distribution<double>(1.0, 100.0)(rng);
    check(x);
  }
  const double elapsed = seconds_since(t0);
  o.expect(elapsed < 60.0, "took " + fmt("%.1f", elapsed) + " s");
  o.note(std::to_string(cases) + " series, " + fmt("%.2f", elapsed) + " s");
}

// 5 -------------------------------------------------------------------------
void structural_properties(Outcome& o) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testing::random_corpus(rng, 1 + rng() % 300, 1 + rng() % 20);
    const auto hvg = as_set(build_hvg_directed(s));
    oracle::EdgeSet previous;
    for (int tau = 1; tau <= 10; ++tau) {
      const auto c = make_config(Method::Thvg, tau);
      const auto g = build_thvg(s, c);
      const auto edges = as_set(g);
      const std::string where = "corpus " + std::to_string(trial) + " tau " + std::to_string(tau);
      o.expect(std::includes(edges.begin(), edges.end(), hvg.begin(), hvg.end()),
               where + ": HVG not contained");
      o.expect(std::includes(edges.begin(), edges.end(), previous.begin(), previous.end()),
               where + ": not monotone in tau");
      if (tau == 1) o.expect(edges == hvg, where + ": tau=1 differs from HVG");
      for (const auto& e : g.edges())
        o.expect(e.from > e.to && s[e.from].timestamp >= s[e.to].timestamp,
                 where + ": forward edge");
      const auto sg = compact(g, c);
      std::size_t total = sg.dropped_self_loops();
      for (const auto& e : sg.edges()) total += e.weight;
      o.expect(total == g.edge_count(), where + ": weight not conserved");
      previous = edges;
    }
  }
  o.note("200 corpora x tau 1..10");
}

// 6 -------------------------------------------------------------------------
void thvg_exceeds_hvg(Outcome& o) {
  std::mt19937_64 rng(6);
  std::size_t message_cases = 0, source_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = testing::random_corpus(rng, 20 + rng() % 400, 3 + rng() % 30);
    const int tau = 2 + static_cast<int>(rng() % 7);
    const auto c = make_config(Method::Thvg, tau);
    const auto hvg = build_hvg_directed(s);
    const auto thvg = build_thvg(s, c);
    const auto extra = oracle::dominance(s.ratings(), tau);
    const auto h = as_set(hvg);
    const bool has_eq1_only =
        std::any_of(extra.begin(), extra.end(), [&](const auto& e) { return !h.count(e); });
    auto strictly_more = [&](const NetworkMetrics& a, const NetworkMetrics& b,
                             const std::string& level) {
      o.expect(a.directed_edge_count > b.directed_edge_count, level + ": edge count");
      o.expect(a.density > b.density, level + ": density");
      o.expect(a.average_degree > b.average_degree, level + ": average degree");
    };
    if (has_eq1_only) {
      ++message_cases;
      strictly_more(network_metrics(thvg), network_metrics(hvg), "message graph");
    }
    // After compaction an Eq. 1-only link may fold into an existing pair or a
    // self-loop; compare only when it adds a new source pair.
    const auto sh = compact(hvg, c), st = compact(thvg, c);
    const auto mh = network_metrics(sh), mt = network_metrics(st);
    if (mt.v > mh.v) {
      ++source_cases;
      strictly_more(mt, mh, "source graph");
    }
  }
  o.expect(message_cases > 0 && source_cases > 0, "no qualifying corpora generated");
  o.note(std::to_string(message_cases) + " message-level and " + std::to_string(source_cases) +
         " source-level corpora");
}

// 7 -------------------------------------------------------------------------
void log_fit_recovery(Outcome& o) {
  std::vector<std::pair<double, double>> pts;
  for (double n : {10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0, 2000.0})
    pts.emplace_back(n, -6.283 * std::log(n) + 34.924);
  const auto fit = fit_log(pts);
  o.expect(std::abs(fit.a + 6.283) <= 1e-9, "a = " + fmt("%.12f", fit.a));
  o.expect(std::abs(fit.b - 34.924) <= 1e-9, "b = " + fmt("%.12f", fit.b));
  o.expect(fit.r_squared == 1.0, "r2 = " + fmt("%.12f", fit.r_squared));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = testing::random_corpus(rng, 4000, 300);
    SweepSpec spec;
    spec.sizes = {10, 20, 40, 80, 160, 300};
    spec.sampling = trial % 2 ? Sampling::RandomSubset : Sampling::Prefix;
    spec.seed = trial;
    const auto sweep = density_sweep(s, make_config(Method::Thvg, 3), spec);
    const auto noisy = fit_log(sweep);
    o.expect(noisy.a < 0, "noisy fit a = " + fmt("%.6f", noisy.a));
    o.expect(std::isfinite(noisy.r_squared) && noisy.r_squared >= 0 && noisy.r_squared <= 1,
             "noisy r2 out of range");
    if (trial == 0)
      o.note("noisy sweep a " + fmt("%.4f", noisy.a) + ", r2 " + fmt("%.4f", noisy.r_squared));
  }
}

// 8 -------------------------------------------------------------------------
void round_trips(Outcome& o) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_corpus(rng, 1 + rng() % 200, 1 + rng() % 15);
    Config c = make_config(trial % 3 == 0 ? Method::Hvg : Method::Thvg, 1 + rng() % 6);
    if (trial % 5 == 1) {
      c.tau_unit = TauUnit::Seconds;
      c.time_window_seconds = 1 + static_cast<std::int64_t>(rng() % 10);
    }
    c.drop_self_loops = trial % 4 != 0;
    const auto mg = trial % 7 == 0 ? build_hvg_undirected(s) : build_graph(s, c);
    const auto sg = compact(mg.orientation() == MessageGraph::Orientation::Backward
                                ? mg
                                : build_hvg_directed(s),
                            c);
    for (auto f : {GraphFormat::AdjJson, GraphFormat::EdgeCsv}) {
      const std::string tag = std::string(to_string(f)) + " graph " + std::to_string(trial);
      o.expect(import_message_graph(export_graph(mg, f), f) == mg, tag + " (message)");
      o.expect(import_source_graph(export_graph(sg, f), f, {.allow_self_loops = true}) == sg,
               tag + " (source)");
    }
  }

  CliSandbox box("acceptance_det");
  const std::string corpus = fixture("sample_corpus.csv");
  const std::vector<std::string> commands = {
      "build --input " + corpus + " --method thvg --tau 3 --out out",
      "build --input " + corpus + " --method eq1 --tau 2 --export edge_csv --out out",
      "sweep --input " + corpus + " --method thvg --tau 2 --sizes 3,6,9 --sampling random " +
          "--repeats 4 --seed 11 --out out",
  };
  for (const auto& cmd : commands) {
    const auto a = box.run(cmd);
    const auto first = slurp(box / "out") + slurp(box / "out.manifest.json") + a.out;
    const auto b = box.run(cmd);
    const auto second = slurp(box / "out") + slurp(box / "out.manifest.json") + b.out;
    o.expect(a.exit_code == 0 && b.exit_code == 0, "CLI failed: " + cmd);
    o.expect(!first.empty() && first == second, "CLI output differs: " + cmd);
  }
  o.note("100 graphs x 2 formats, " + std::to_string(commands.size()) + " CLI reruns");
}

// 9 -------------------------------------------------------------------------
void end_to_end(Outcome& o) {
  CliSandbox box("acceptance_e2e");
  const std::vector<std::pair<std::string, std::string>> steps = {
      {"build --input " + fixture("sample_corpus.csv") +
           " --method thvg --tau 3 --out sample_messages.json",
       "sample_messages.json"},
      {"compact --input sample_messages.json --out sample_sources.json", "sample_sources.json"},
      {"metrics --input sample_sources.json --out sample_metrics.txt", "sample_metrics.txt"},
      {"rank --input sample_sources.json --primary 3 --out sample_rank.txt", "sample_rank.txt"},
  };
  for (const auto& [cmd, produced] : steps) {
    const auto r = box.run(cmd);
    o.expect(r.exit_code == 0, "exit " + std::to_string(r.exit_code) + ": " + cmd);
    const auto golden = slurp(fixture("golden/" + produced));
    o.expect(!golden.empty() && slurp(box / produced) == golden, produced + " differs from golden");
  }
  o.note("4 stages match golden");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"F-measure table consistency", f_measure_table},
      {"published 7-node matrix metrics", matrix7_fixture},
      {"i.i.d. HVG degree law", iid_degree_law},
      {"builder/oracle equivalence", oracle_equivalence},
      {"structural properties", structural_properties},
      {"THVG exceeds HVG when dominance adds links", thvg_exceeds_hvg},
      {"log-fit recovery", log_fit_recovery},
      {"round trips and determinism", round_trips},
      {"end-to-end pipeline vs golden", end_to_end},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    failed += !o.ok();
    std::cout << (o.ok() ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " ("
              << o.text() << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
