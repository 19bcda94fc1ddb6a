#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "thvg/compaction.hpp"
#include "thvg/evaluation.hpp"
#include "thvg/ingest_io.hpp"
#include "thvg/metrics.hpp"
#include "thvg/version.hpp"
#include "thvg/visibility.hpp"

namespace py = pybind11;
using namespace thvg;

namespace {

using PairList = std::vector<std::pair<std::string, std::string>>;

Config make_config(int tau, const std::string& method, const std::string& tau_unit,
                   bool drop_self_loops, std::optional<std::int64_t> window) {
  Config c;
  c.tau = tau;
  c.method = parse_method(method);
  c.tau_unit = parse_tau_unit(tau_unit);
  c.drop_self_loops = drop_self_loops;
  c.time_window_seconds = window;
  c.validate();
  return c;
}

PublicationSeries read_publications(const std::string& path, const std::string& format,
                                    const std::string& rating, double volume_weight,
                                    double rate_weight) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  RatingPolicy policy;
  policy.mode = parse_rating_mode(rating);
  policy.volume_weight = volume_weight;
  policy.rate_weight = rate_weight;
  policy.validate();
  const auto raw = parse_publications(in, parse_input_format(format), policy);
  return PublicationSeries::normalize(resolve_ratings(raw, policy));
}

EdgeSet to_edge_set(const PairList& pairs, bool allow_self_pairs) {
  EdgeSet out(allow_self_pairs);
  for (const auto& [a, b] : pairs) out.insert(a, b);
  return out;
}

PairList to_pairs(const EdgeSet& s) { return {s.pairs().begin(), s.pairs().end()}; }

}  // namespace

PYBIND11_MODULE(_thvg, m) {
  m.doc() = "Temporal horizontal visibility graphs for publication streams";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "ThvgError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Publication>(m, "Publication")
      .def(py::init<std::string, std::string, Timestamp, double>(), py::arg("message_id"),
           py::arg("source_id"), py::arg("timestamp"), py::arg("rating"))
      .def_readwrite("message_id", &Publication::message_id)
      .def_readwrite("source_id", &Publication::source_id)
      .def_readwrite("timestamp", &Publication::timestamp)
      .def_readwrite("rating", &Publication::rating)
      .def("__eq__", [](const Publication& a, const Publication& b) { return a == b; })
      .def("__repr__", [](const Publication& p) {
        return "Publication(" + p.message_id + ", " + p.source_id + ", " +
               std::to_string(p.timestamp) + ", " + std::to_string(p.rating) + ")";
      });

  py::class_<PublicationSeries>(m, "PublicationSeries")
      .def_static("normalize",
                  [](std::vector<Publication> raw) {
                    return PublicationSeries::normalize(std::move(raw));
                  })
      .def_static("from_ratings", &series_from_ratings, py::arg("ratings"),
                  py::arg("sources") = std::vector<std::string>{})
      .def("__len__", &PublicationSeries::size)
      .def("__getitem__",
           [](const PublicationSeries& s, std::size_t i) {
             if (i >= s.size()) throw py::index_error();
             return s[i];
           })
      .def_property_readonly("items", &PublicationSeries::items)
      .def("ratings", &PublicationSeries::ratings)
      .def("prefix", &PublicationSeries::prefix)
      .def("distinct_sources", &PublicationSeries::distinct_sources);

  m.def("read_publications", &read_publications, py::arg("path"), py::arg("format") = "csv",
        py::arg("rating") = "provided", py::arg("volume_weight") = 1.0,
        py::arg("rate_weight") = 1.0,
        "Parse a CSV or JSONL file and return the time-ordered series.");

  py::class_<Config>(m, "Config")
      .def(py::init(&make_config), py::arg("tau") = 1, py::arg("method") = "thvg",
           py::arg("tau_unit") = "index", py::arg("drop_self_loops") = true,
           py::arg("time_window_seconds") = std::nullopt)
      .def_readonly("tau", &Config::tau)
      .def_property_readonly("method",
                             [](const Config& c) { return std::string(to_string(c.method)); })
      .def_property_readonly("tau_unit",
                             [](const Config& c) { return std::string(to_string(c.tau_unit)); })
      .def_readonly("drop_self_loops", &Config::drop_self_loops)
      .def_readonly("time_window_seconds", &Config::time_window_seconds);

  py::class_<NodeMeta>(m, "NodeMeta")
      .def_readonly("message_id", &NodeMeta::message_id)
      .def_readonly("source_id", &NodeMeta::source_id)
      .def_readonly("timestamp", &NodeMeta::timestamp)
      .def_readonly("rating", &NodeMeta::rating);

  py::class_<MessageGraph>(m, "MessageGraph")
      .def_property_readonly("nodes", &MessageGraph::nodes)
      .def_property_readonly("edges",
                             [](const MessageGraph& g) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.from, e.to);
                               return out;
                             })
      .def_property_readonly("symmetric",
                             [](const MessageGraph& g) {
                               return g.orientation() == MessageGraph::Orientation::Symmetric;
                             })
      .def_property_readonly("time_window_extension", &MessageGraph::time_window_extension)
      .def("node_count", &MessageGraph::node_count)
      .def("edge_count", &MessageGraph::edge_count)
      .def("has_edge", &MessageGraph::has_edge)
      .def("adjacency", &MessageGraph::adjacency)
      .def("export", [](const MessageGraph& g, const std::string& f) {
        return export_graph(g, parse_graph_format(f));
      })
      .def("__eq__", [](const MessageGraph& a, const MessageGraph& b) { return a == b; });

  py::class_<SourceNode>(m, "SourceNode")
      .def_readonly("source_id", &SourceNode::source_id)
      .def_readonly("earliest_timestamp", &SourceNode::earliest_timestamp)
      .def_readonly("rating", &SourceNode::rating)
      .def_readonly("message_count", &SourceNode::message_count);

  py::class_<SourceGraph>(m, "SourceGraph")
      .def_property_readonly("nodes", &SourceGraph::nodes)
      .def_property_readonly("edges",
                             [](const SourceGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::size_t>> out;
                               for (const auto& e : g.edges())
                                 out.emplace_back(g.nodes()[e.from].source_id,
                                                  g.nodes()[e.to].source_id, e.weight);
                               return out;
                             })
      .def_property_readonly("dropped_self_loops", &SourceGraph::dropped_self_loops)
      .def("node_count", &SourceGraph::node_count)
      .def("edge_count", &SourceGraph::edge_count)
      .def("index_of", &SourceGraph::index_of)
      .def("adjacency", &SourceGraph::adjacency)
      .def("edge_pairs", [](const SourceGraph& g) { return to_pairs(edge_set(g)); })
      .def("export", [](const SourceGraph& g, const std::string& f) {
        return export_graph(g, parse_graph_format(f));
      })
      .def("__eq__", [](const SourceGraph& a, const SourceGraph& b) { return a == b; });

  m.def("build", &build_graph, py::arg("series"), py::arg("config") = Config{},
        "Message graph for the configured method.");
  m.def("build_hvg",
        [](const PublicationSeries& s, bool directed) {
          return directed ? build_hvg_directed(s) : build_hvg_undirected(s);
        },
        py::arg("series"), py::arg("directed") = true);
  m.def("compact", &compact, py::arg("graph"), py::arg("config") = Config{});

  m.def("import_graph",
        [](const std::string& text, const std::string& f, bool allow_self_loops) {
          return import_graph(text, parse_graph_format(f), {allow_self_loops});
        },
        py::arg("text"), py::arg("format") = "adj_json", py::arg("allow_self_loops") = false);

  py::class_<NetworkMetrics>(m, "NetworkMetrics")
      .def_readonly("n", &NetworkMetrics::n)
      .def_readonly("v", &NetworkMetrics::v)
      .def_readonly("directed_edge_count", &NetworkMetrics::directed_edge_count)
      .def_readonly("density", &NetworkMetrics::density)
      .def_readonly("average_degree", &NetworkMetrics::average_degree)
      .def_readonly("diameter", &NetworkMetrics::diameter)
      .def_readonly("component_count", &NetworkMetrics::component_count)
      .def_readonly("degree_histogram", &NetworkMetrics::degree_histogram);

  m.def("network_metrics", py::overload_cast<const MessageGraph&>(&network_metrics));
  m.def("network_metrics", py::overload_cast<const SourceGraph&>(&network_metrics));

  m.def("density_sweep",
        [](const PublicationSeries& s, const Config& c, std::vector<std::size_t> sizes,
           const std::string& sampling, std::uint64_t seed, int repeats) {
          SweepSpec spec{std::move(sizes), parse_sampling(sampling), seed, repeats};
          std::vector<std::pair<std::size_t, double>> out;
          for (const auto& p : density_sweep(s, c, spec)) out.emplace_back(p.n, p.density);
          return out;
        },
        py::arg("series"), py::arg("config"), py::arg("sizes"), py::arg("sampling") = "prefix",
        py::arg("seed") = 0, py::arg("repeats") = 1);

  py::class_<LogFit>(m, "LogFit")
      .def_readonly("a", &LogFit::a)
      .def_readonly("b", &LogFit::b)
      .def_readonly("r_squared", &LogFit::r_squared)
      .def_readonly("points", &LogFit::points)
      .def("__call__", &LogFit::operator());

  m.def("fit_log", [](const std::vector<std::pair<double, double>>& pts) { return fit_log(pts); },
        py::arg("points"), "Least-squares fit of D = a ln(n) + b.");

  py::class_<RankedSource>(m, "RankedSource")
      .def_readonly("source_id", &RankedSource::source_id)
      .def_readonly("score", &RankedSource::score)
      .def_readonly("in_weight", &RankedSource::in_weight)
      .def_readonly("in_degree", &RankedSource::in_degree)
      .def_readonly("out_degree", &RankedSource::out_degree)
      .def_readonly("earliest_timestamp", &RankedSource::earliest_timestamp)
      .def_readonly("rating", &RankedSource::rating);

  m.def("rank_sources", &rank_sources, py::arg("graph"));
  m.def("infer_primary", &infer_primary, py::arg("graph"), py::arg("top_k"));

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("tp", &EvalReport::tp)
      .def_readonly("fp", &EvalReport::fp)
      .def_readonly("fn", &EvalReport::fn)
      .def_readonly("precision", &EvalReport::precision)
      .def_readonly("recall", &EvalReport::recall)
      .def_readonly("f_measure", &EvalReport::f_measure);

  m.def("evaluate",
        [](const PairList& predicted, const PairList& gold, bool undirected,
           bool allow_self_pairs) {
          return evaluate(to_edge_set(predicted, allow_self_pairs),
                          to_edge_set(gold, allow_self_pairs), undirected);
        },
        py::arg("predicted"), py::arg("gold"), py::arg("undirected") = false,
        py::arg("allow_self_pairs") = false);
  m.def("f_measure", &f_measure, py::arg("precision"), py::arg("recall"));
}
