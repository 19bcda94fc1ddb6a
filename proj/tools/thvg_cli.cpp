// Command-line front end: one subcommand per library operation.
//
// Exit codes: 0 success, 1 internal failure, 2 argument or configuration
// error, 3 input parse error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thvg/compaction.hpp"
#include "thvg/evaluation.hpp"
#include "thvg/ingest_io.hpp"
#include "thvg/metrics.hpp"
#include "thvg/visibility.hpp"
#include "thvg/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace thvg;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

/// Input file could not be read; reported like a parse error.
struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << bytes;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Options shared by the commands that construct graphs from a corpus.
struct BuildOptions {
  std::string input;
  std::string format;
  std::string method = "thvg";
  std::optional<int> tau;
  std::string tau_unit = "index";
  std::optional<std::int64_t> window;
  std::string rating = "provided";
  double volume_weight = 1.0;
  double rate_weight = 1.0;
  bool keep_self_loops = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--input", input, "Publication stream")->required();
    cmd.add_option("--format", format, "csv or jsonl (default: from the file extension)");
    cmd.add_option("--method", method, "hvg, thvg or eq1")->capture_default_str();
    cmd.add_option("--tau", tau, "Node-index window (required for thvg and eq1)");
    cmd.add_option("--tau-unit", tau_unit, "index or seconds")->capture_default_str();
    cmd.add_option("--window", window, "Window in seconds when --tau-unit=seconds");
    cmd.add_option("--rating", rating, "provided or estimate")->capture_default_str();
    cmd.add_option("--volume-weight", volume_weight)->capture_default_str();
    cmd.add_option("--rate-weight", rate_weight)->capture_default_str();
    cmd.add_flag("--keep-self-loops", keep_self_loops, "Retain same-source links when compacting");
  }

  Config config() const {
    Config c;
    c.method = parse_method(method);
    if (c.method != Method::Hvg && !tau)
      throw ConfigError("--tau is required with --method " + method);
    c.tau = tau.value_or(1);
    c.tau_unit = parse_tau_unit(tau_unit);
    c.time_window_seconds = window;
    c.drop_self_loops = !keep_self_loops;
    c.validate();
    return c;
  }

  RatingPolicy policy() const {
    RatingPolicy p;
    p.mode = parse_rating_mode(rating);
    p.volume_weight = volume_weight;
    p.rate_weight = rate_weight;
    p.validate();
    return p;
  }

  InputFormat input_format() const {
    if (!format.empty()) return parse_input_format(format);
    return std::filesystem::path(input).extension() == ".jsonl" ? InputFormat::Jsonl
                                                                : InputFormat::Csv;
  }

  PublicationSeries series(const std::string& bytes) const {
    std::istringstream in(bytes);
    const auto raw = parse_publications(in, input_format(), policy());
    return PublicationSeries::normalize(resolve_ratings(raw, policy()));
  }
};

GraphFormat graph_format_for(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return parse_graph_format(explicit_format);
  const auto ext = std::filesystem::path(path).extension();
  if (ext == ".csv") return GraphFormat::EdgeCsv;
  if (ext == ".dot") return GraphFormat::Dot;
  if (ext == ".graphml") return GraphFormat::GraphMl;
  return GraphFormat::AdjJson;
}

json config_json(const Config& c) {
  json j;
  j["method"] = to_string(c.method);
  j["tau"] = c.tau;
  j["tau_unit"] = to_string(c.tau_unit);
  j["time_window_seconds"] = c.time_window_seconds ? json(*c.time_window_seconds) : json(nullptr);
  j["drop_self_loops"] = c.drop_self_loops;
  return j;
}

json policy_json(const RatingPolicy& p) {
  json j;
  j["mode"] = to_string(p.mode);
  j["volume_weight"] = p.volume_weight;
  j["rate_weight"] = p.rate_weight;
  return j;
}

/// Run description written next to every output file.
class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed) {
    doc_["command"] = std::move(command);
    doc_["tool"] = "thvg";
    doc_["version"] = kVersion;
    doc_["seed"] = seed;
    doc_["inputs"] = json::array();
  }

  void input(const std::string& path, const std::string& bytes) {
    doc_["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64(bytes)}});
  }
  json& operator[](const char* key) { return doc_[key]; }

  /// Writes `bytes` to `path` and the manifest to `path`.manifest.json.
  void emit(const std::string& path, const std::string& bytes) {
    write_file(path, bytes);
    doc_["output"] = {{"path", path}, {"fnv1a64", fnv1a64(bytes)}};
    write_file(path + ".manifest.json", doc_.dump(2) + "\n");
  }

 private:
  json doc_;
};

// Prints to stdout, and also to a file (with manifest) when `out` is set.
void report(Manifest& manifest, const std::string& out, const std::string& text) {
  std::cout << text;
  if (!out.empty()) manifest.emit(out, text);
}

std::string metrics_text(const NetworkMetrics& m) {
  std::ostringstream s;
  s << "n " << m.n << "\n"
    << "v " << m.v << "\n"
    << "directed_edges " << m.directed_edge_count << "\n"
    << "density " << fixed6(m.density) << "\n"
    << "average_degree " << fixed6(m.average_degree) << "\n"
    << "diameter " << m.diameter << "\n"
    << "components " << m.component_count << "\n";
  return s.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("THVG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("THVG_SEED must be a nonnegative integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal horizontal visibility graphs for publication streams"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "Random seed (default: $THVG_SEED or 0)");

  // build ---------------------------------------------------------------------
  auto* build = app.add_subcommand("build", "Construct the message-level graph");
  BuildOptions build_opts;
  build_opts.add_to(*build);
  std::string build_out, build_export;
  build->add_option("--out", build_out, "Output graph file")->required();
  build->add_option("--export", build_export, "adj_json, edge_csv, dot or graphml");

  // compact -------------------------------------------------------------------
  auto* compact_cmd = app.add_subcommand("compact", "Merge message nodes per source");
  std::string compact_in, compact_in_format, compact_out, compact_export;
  bool compact_keep = false;
  compact_cmd->add_option("--input", compact_in, "Message graph file")->required();
  compact_cmd->add_option("--input-format", compact_in_format, "adj_json or edge_csv");
  compact_cmd->add_flag("--keep-self-loops", compact_keep);
  compact_cmd->add_option("--out", compact_out)->required();
  compact_cmd->add_option("--export", compact_export);

  // metrics -------------------------------------------------------------------
  auto* metrics_cmd = app.add_subcommand("metrics", "Density, degree, diameter, components");
  std::string metrics_in, metrics_in_format, metrics_out;
  metrics_cmd->add_option("--input", metrics_in, "Graph file")->required();
  metrics_cmd->add_option("--input-format", metrics_in_format);
  metrics_cmd->add_option("--out", metrics_out, "Also write the report here");

  // sweep ---------------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Density versus number of sources");
  BuildOptions sweep_opts;
  sweep_opts.add_to(*sweep_cmd);
  std::vector<std::size_t> sweep_sizes;
  std::string sweep_sampling = "prefix", sweep_out;
  int sweep_repeats = 1;
  bool sweep_fit = false;
  sweep_cmd->add_option("--sizes", sweep_sizes, "Comma-separated source counts")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--sampling", sweep_sampling, "prefix or random")->capture_default_str();
  sweep_cmd->add_option("--repeats", sweep_repeats)->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "n,D table")->required();
  sweep_cmd->add_flag("--fit", sweep_fit, "Print the D = a ln(n) + b fit");

  // eval ----------------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "Precision, recall and F-measure of edges");
  std::string eval_pred, eval_pred_graph, eval_gold, eval_out;
  bool eval_undirected = false, eval_self = false;
  auto* pred_opt = eval_cmd->add_option("--predicted", eval_pred, "Edge CSV (from_source,to_source)");
  auto* pred_graph_opt =
      eval_cmd->add_option("--predicted-graph", eval_pred_graph, "Compacted graph file");
  pred_opt->excludes(pred_graph_opt);
  eval_cmd->add_option("--gold", eval_gold, "Edge CSV (from_source,to_source)")->required();
  eval_cmd->add_flag("--undirected", eval_undirected);
  eval_cmd->add_flag("--allow-self-pairs", eval_self);
  eval_cmd->add_option("--out", eval_out);

  // rank ----------------------------------------------------------------------
  auto* rank_cmd = app.add_subcommand("rank", "Rank sources by incoming weight");
  std::string rank_in, rank_in_format, rank_out;
  std::size_t rank_top = 0, rank_primary = 0;
  rank_cmd->add_option("--input", rank_in, "Compacted graph file")->required();
  rank_cmd->add_option("--input-format", rank_in_format);
  rank_cmd->add_option("--top", rank_top, "Rows to print (default: all)");
  rank_cmd->add_option("--primary", rank_primary, "Nominate this many primary sources")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_option("--out", rank_out);

  // export --------------------------------------------------------------------
  auto* export_cmd = app.add_subcommand("export", "Convert a graph file");
  std::string export_in, export_in_format, export_to, export_out;
  export_cmd->add_option("--input", export_in)->required();
  export_cmd->add_option("--input-format", export_in_format);
  export_cmd->add_option("--to", export_to, "adj_json, edge_csv, dot or graphml")->required();
  export_cmd->add_option("--out", export_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

    if (*build) {
      const auto config = build_opts.config();
      const auto policy = build_opts.policy();
      const auto format = build_export.empty() ? graph_format_for(build_out, "")
                                               : parse_graph_format(build_export);
      const auto bytes = read_file(build_opts.input);
      const auto graph = build_graph(build_opts.series(bytes), config);
      Manifest m("build", seed);
      m.input(build_opts.input, bytes);
      m["config"] = config_json(config);
      m["rating_policy"] = policy_json(policy);
      m["format"] = to_string(format);
      m.emit(build_out, export_graph(graph, format));
    } else if (*compact_cmd) {
      Config config;
      config.drop_self_loops = !compact_keep;
      const auto bytes = read_file(compact_in);
      const auto graph = import_message_graph(bytes, graph_format_for(compact_in, compact_in_format));
      const auto format = compact_export.empty() ? graph_format_for(compact_out, "")
                                                 : parse_graph_format(compact_export);
      Manifest m("compact", seed);
      m.input(compact_in, bytes);
      m["config"] = config_json(config);
      m["format"] = to_string(format);
      m.emit(compact_out, export_graph(compact(graph, config), format));
    } else if (*metrics_cmd) {
      const auto bytes = read_file(metrics_in);
      const auto graph = import_graph(bytes, graph_format_for(metrics_in, metrics_in_format));
      const auto metrics =
          std::visit([](const auto& g) { return network_metrics(g); }, graph);
      Manifest m("metrics", seed);
      m.input(metrics_in, bytes);
      report(m, metrics_out, metrics_text(metrics));
    } else if (*sweep_cmd) {
      const auto config = sweep_opts.config();
      const auto policy = sweep_opts.policy();
      SweepSpec spec;
      spec.sizes = sweep_sizes;
      spec.sampling = parse_sampling(sweep_sampling);
      spec.seed = seed;
      spec.repeats = sweep_repeats;
      spec.validate();
      const auto bytes = read_file(sweep_opts.input);
      const auto points = density_sweep(sweep_opts.series(bytes), config, spec);
      Manifest m("sweep", seed);
      m.input(sweep_opts.input, bytes);
      m["config"] = config_json(config);
      m["rating_policy"] = policy_json(policy);
      m["sweep"] = {{"sizes", sweep_sizes},
                    {"sampling", to_string(spec.sampling)},
                    {"repeats", spec.repeats}};
      m.emit(sweep_out, write_sweep_csv(points));
      if (sweep_fit) {
        const auto fit = fit_log(points);
        std::cout << "a " << fixed6(fit.a) << "\n"
                  << "b " << fixed6(fit.b) << "\n"
                  << "r_squared " << fixed6(fit.r_squared) << "\n";
      }
    } else if (*eval_cmd) {
      if (eval_pred.empty() && eval_pred_graph.empty())
        throw ConfigError("one of --predicted or --predicted-graph is required");
      Manifest m("eval", seed);
      EdgeSet predicted(eval_self);
      if (!eval_pred.empty()) {
        const auto bytes = read_file(eval_pred);
        std::istringstream in(bytes);
        predicted = read_edge_set(in, eval_self);
        m.input(eval_pred, bytes);
      } else {
        const auto bytes = read_file(eval_pred_graph);
        predicted = edge_set(import_source_graph(bytes, graph_format_for(eval_pred_graph, "")));
        m.input(eval_pred_graph, bytes);
      }
      const auto gold_bytes = read_file(eval_gold);
      std::istringstream gold_in(gold_bytes);
      const auto gold = read_edge_set(gold_in, eval_self);
      m.input(eval_gold, gold_bytes);
      m["undirected"] = eval_undirected;

      const auto r = evaluate(predicted, gold, eval_undirected);
      std::ostringstream s;
      s << "tp " << r.tp << " fp " << r.fp << " fn " << r.fn << "\n"
        << "precision " << fixed6(r.precision) << " recall " << fixed6(r.recall)
        << " f_measure " << fixed6(r.f_measure) << "\n";
      report(m, eval_out, s.str());
    } else if (*rank_cmd) {
      const auto bytes = read_file(rank_in);
      const auto graph = import_source_graph(bytes, graph_format_for(rank_in, rank_in_format));
      const auto ranking = rank_sources(graph);
      std::ostringstream s;
      s << "rank source_id score in_weight in_degree out_degree earliest_timestamp rating\n";
      const std::size_t rows = rank_top == 0 ? ranking.size() : std::min(rank_top, ranking.size());
      for (std::size_t k = 0; k < rows; ++k) {
        const auto& r = ranking[k];
        s << k + 1 << " " << r.source_id << " " << fixed6(r.score) << " " << r.in_weight << " "
          << r.in_degree << " " << r.out_degree << " " << r.earliest_timestamp << " "
          << fixed6(r.rating) << "\n";
      }
      if (rank_primary > 0) {
        s << "primary (heuristic: in_weight desc, out_degree asc, earliest first):";
        for (const auto& id : infer_primary(graph, rank_primary)) s << " " << id;
        s << "\n";
      }
      Manifest m("rank", seed);
      m.input(rank_in, bytes);
      report(m, rank_out, s.str());
    } else if (*export_cmd) {
      const auto bytes = read_file(export_in);
      const auto graph = import_graph(bytes, graph_format_for(export_in, export_in_format));
      const auto format = parse_graph_format(export_to);
      Manifest m("export", seed);
      m.input(export_in, bytes);
      m["format"] = to_string(format);
      m.emit(export_out, export_graph(graph, format));
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
