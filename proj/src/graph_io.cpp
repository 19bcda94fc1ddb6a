#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "thvg/ingest_io.hpp"
#include "text_util.hpp"

namespace thvg {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kAdjFormat = "thvg-adjacency";
constexpr std::string_view kConvention =
    "row = edge source (later node), column = edge target (earlier node)";

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string matrix_rows(const std::vector<std::vector<std::uint8_t>>& a) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.size(); ++r) {
    out += r == 0 ? "\n    [" : ",\n    [";
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      if (c) out += ",";
      out += a[r][c] ? '1' : '0';
    }
    out += "]";
  }
  out += a.empty() ? "]" : "\n  ]";
  return out;
}

// Writes `fields` one per line; values are pre-rendered JSON.
std::string json_document(
    const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out = "{\n";
  for (std::size_t k = 0; k < fields.size(); ++k) {
    out += "  " + json_string(fields[k].first) + ": " + fields[k].second;
    out += k + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

std::string node_list(const std::vector<std::string>& rendered) {
  if (rendered.empty()) return "[]";
  std::string out = "[";
  for (std::size_t k = 0; k < rendered.size(); ++k)
    out += (k ? ",\n    " : "\n    ") + rendered[k];
  return out + "\n  ]";
}

// --- ADJ_JSON ---------------------------------------------------------------

std::string adj_json(const MessageGraph& g) {
  std::vector<std::string> nodes;
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const auto& m = g.nodes()[k];
    json obj;
    obj["index"] = k;
    obj["message_id"] = m.message_id;
    obj["source_id"] = m.source_id;
    obj["timestamp"] = m.timestamp;
    obj["rating"] = m.rating;
    nodes.push_back(obj.dump());
  }
  const bool symmetric = g.orientation() == MessageGraph::Orientation::Symmetric;
  return json_document({
      {"format", json_string(kAdjFormat)},
      {"version", "1"},
      {"kind", json_string("message")},
      {"orientation", json_string(symmetric ? "symmetric" : "backward")},
      {"time_window_extension", g.time_window_extension() ? "true" : "false"},
      {"convention", json_string(kConvention)},
      {"n", std::to_string(g.node_count())},
      {"nodes", node_list(nodes)},
      {"matrix", matrix_rows(g.adjacency())},
  });
}

std::string adj_json(const SourceGraph& g) {
  std::vector<std::string> nodes;
  for (const auto& s : g.nodes()) {
    json obj;
    obj["id"] = s.source_id;
    obj["earliest_timestamp"] = s.earliest_timestamp;
    obj["rating"] = s.rating;
    obj["message_count"] = s.message_count;
    nodes.push_back(obj.dump());
  }
  json weights = json::array();
  for (const auto& e : g.edges())
    if (e.weight != 1) weights.push_back({e.from, e.to, e.weight});
  return json_document({
      {"format", json_string(kAdjFormat)},
      {"version", "1"},
      {"kind", json_string("source")},
      {"self_loops", g.has_self_loops() ? "true" : "false"},
      {"dropped_self_loops", std::to_string(g.dropped_self_loops())},
      {"convention", json_string(kConvention)},
      {"n", std::to_string(g.node_count())},
      {"nodes", node_list(nodes)},
      {"matrix", matrix_rows(g.adjacency())},
      {"weights", weights.dump()},
  });
}

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw ParseError(0, "field '" + field + "': " + what);
}

const json& require(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) schema_error(field, "missing");
  return *it;
}

template <typename T>
T get_as(const json& v, const std::string& field) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    schema_error(field, "has the wrong type");
  }
}

std::size_t get_count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_error(field, "must be a nonnegative integer");
  return v.get<std::size_t>();
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) schema_error(field, "must be a number");
  return v.get<double>();
}

bool get_flag(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) return false;
  if (!it->is_boolean()) schema_error(field, "must be a boolean");
  return it->get<bool>();
}

// Matrix entries as (row, col) pairs; validates shape against n.
std::vector<Edge> read_matrix(const json& doc, std::size_t n) {
  const auto& m = require(doc, "matrix");
  if (!m.is_array()) schema_error("matrix", "must be an array of rows");
  if (m.size() != n)
    schema_error("matrix", "has " + std::to_string(m.size()) +
                               " rows but n is " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = m[r];
    if (!row.is_array() || row.size() != n)
      schema_error("matrix", "is not square (row " + std::to_string(r) + ")");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = row[c];
      if (!cell.is_number_integer() || (cell != 0 && cell != 1))
        schema_error("matrix", "entries must be 0 or 1");
      if (cell == 1) edges.push_back({r, c});
    }
  }
  return edges;
}

std::size_t read_n(const json& doc) {
  const std::size_t n = get_count(require(doc, "n"), "n");
  const auto& nodes = require(doc, "nodes");
  if (!nodes.is_array()) schema_error("nodes", "must be an array");
  if (nodes.size() != n)
    schema_error("nodes", "has " + std::to_string(nodes.size()) +
                              " entries but n is " + std::to_string(n));
  return n;
}

MessageGraph message_from_json(const json& doc) {
  const std::size_t n = read_n(doc);
  std::vector<NodeMeta> nodes;
  nodes.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& node = doc["nodes"][k];
    const std::string f = "nodes[" + std::to_string(k) + "]";
    if (!node.is_object()) schema_error(f, "must be an object");
    if (node.contains("index") && get_count(node["index"], f + ".index") != k)
      schema_error(f + ".index", "does not match its position");
    NodeMeta m;
    m.message_id = get_as<std::string>(require(node, "message_id"), f + ".message_id");
    m.source_id = get_as<std::string>(require(node, "source_id"), f + ".source_id");
    m.timestamp = get_as<Timestamp>(require(node, "timestamp"), f + ".timestamp");
    m.rating = get_number(require(node, "rating"), f + ".rating");
    nodes.push_back(std::move(m));
  }
  auto orientation = MessageGraph::Orientation::Backward;
  if (const auto it = doc.find("orientation"); it != doc.end()) {
    const auto o = get_as<std::string>(*it, "orientation");
    if (o == "symmetric")
      orientation = MessageGraph::Orientation::Symmetric;
    else if (o != "backward")
      schema_error("orientation", "must be 'backward' or 'symmetric'");
  }
  MessageGraph g(std::move(nodes), read_matrix(doc, n), orientation);
  g.set_time_window_extension(get_flag(doc, "time_window_extension"));
  return g;
}

SourceGraph source_from_json(const json& doc, const ImportOptions& options) {
  const std::size_t n = read_n(doc);
  std::vector<SourceNode> nodes;
  nodes.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& node = doc["nodes"][k];
    const std::string f = "nodes[" + std::to_string(k) + "]";
    SourceNode s;
    s.rating = 1.0;
    s.message_count = 1;
    if (node.is_string()) {
      s.source_id = node.get<std::string>();
    } else if (node.is_object()) {
      s.source_id = get_as<std::string>(require(node, "id"), f + ".id");
      if (node.contains("earliest_timestamp"))
        s.earliest_timestamp = get_as<Timestamp>(node["earliest_timestamp"], f + ".earliest_timestamp");
      if (node.contains("rating")) s.rating = get_number(node["rating"], f + ".rating");
      if (node.contains("message_count"))
        s.message_count = get_count(node["message_count"], f + ".message_count");
    } else {
      schema_error(f, "must be a string or an object");
    }
    nodes.push_back(std::move(s));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> weight;
  for (const auto& e : read_matrix(doc, n)) weight[{e.from, e.to}] = 1;
  if (const auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_array()) schema_error("weights", "must be an array");
    for (const auto& w : *it) {
      if (!w.is_array() || w.size() != 3)
        schema_error("weights", "entries must be [row, column, weight]");
      const auto r = get_count(w[0], "weights");
      const auto c = get_count(w[1], "weights");
      const auto value = get_count(w[2], "weights");
      const auto cell = weight.find({r, c});
      if (cell == weight.end())
        schema_error("weights", "entry for a zero matrix cell");
      if (value == 0) schema_error("weights", "weights must be positive");
      cell->second = value;
    }
  }
  std::vector<WeightedEdge> edges;
  for (const auto& [pair, w] : weight) edges.push_back({pair.first, pair.second, w});

  const bool self_loops = options.allow_self_loops || get_flag(doc, "self_loops");
  SourceGraph g(std::move(nodes), std::move(edges), self_loops);
  if (doc.contains("dropped_self_loops"))
    g.set_dropped_self_loops(get_count(doc["dropped_self_loops"], "dropped_self_loops"));
  return g;
}

AnyGraph import_adj_json(std::string_view text, const ImportOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "adjacency document must be a JSON object");
  if (const auto it = doc.find("format");
      it != doc.end() && (!it->is_string() || *it != kAdjFormat))
    schema_error("format", "must be '" + std::string(kAdjFormat) + "'");
  std::string kind = "source";
  if (const auto it = doc.find("kind"); it != doc.end())
    kind = get_as<std::string>(*it, "kind");
  if (kind == "message") return message_from_json(doc);
  if (kind == "source") return source_from_json(doc, options);
  schema_error("kind", "must be 'message' or 'source'");
}

// --- EDGE_CSV ---------------------------------------------------------------
//
// Comment lines carry what an edge list cannot: the graph kind and flags in
// the first line, and one `# node,...` line per node so isolated nodes and
// node attributes survive a round trip.

std::string edge_csv(const MessageGraph& g) {
  const bool symmetric = g.orientation() == MessageGraph::Orientation::Symmetric;
  std::string out = "# thvg edge_csv v1 kind=message orientation=";
  out += symmetric ? "symmetric" : "backward";
  out += " time_window_extension=";
  out += g.time_window_extension() ? "1\n" : "0\n";
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const auto& m = g.nodes()[k];
    out += "# node," + std::to_string(k) + "," + m.message_id + "," +
           m.source_id + "," + std::to_string(m.timestamp) + "," +
           detail::exact(m.rating) + "\n";
  }
  out += "from,to,weight\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.from) + "," + std::to_string(e.to) + ",1\n";
  return out;
}

std::string edge_csv(const SourceGraph& g) {
  std::string out = "# thvg edge_csv v1 kind=source self_loops=";
  out += g.has_self_loops() ? "1" : "0";
  out += " dropped_self_loops=" + std::to_string(g.dropped_self_loops()) + "\n";
  for (const auto& s : g.nodes())
    out += "# node," + s.source_id + "," + std::to_string(s.earliest_timestamp) +
           "," + detail::exact(s.rating) + "," + std::to_string(s.message_count) +
           "\n";
  out += "from,to,weight\n";
  for (const auto& e : g.edges())
    out += g.nodes()[e.from].source_id + "," + g.nodes()[e.to].source_id + "," +
           std::to_string(e.weight) + "\n";
  return out;
}

struct CsvHeader {
  std::string kind = "source";
  std::map<std::string, std::string, std::less<>> flags;
};

CsvHeader parse_header_comment(std::string_view line) {
  CsvHeader h;
  for (auto tok : detail::split(line, ' ')) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) continue;
    h.flags.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
  }
  if (const auto it = h.flags.find("kind"); it != h.flags.end()) h.kind = it->second;
  return h;
}

template <typename T>
T csv_value(std::string_view text, std::size_t line, const char* what) {
  std::optional<T> v;
  if constexpr (std::is_floating_point_v<T>)
    v = detail::parse_double(text);
  else
    v = detail::parse_int<T>(text);
  if (!v) throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
  return *v;
}

AnyGraph import_edge_csv(std::string_view text, const ImportOptions& options) {
  CsvHeader header;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> node_rows;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> edge_rows;
  bool seen_columns = false;

  const auto lines = detail::split(text, '\n');
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    const auto row = detail::trim(lines[k]);
    if (row.empty()) continue;
    if (row.front() == '#') {
      const auto body = detail::trim(row.substr(1));
      if (body.starts_with("thvg edge_csv")) {
        header = parse_header_comment(body);
      } else if (body.starts_with("node,")) {
        node_rows.emplace_back(line, detail::split(body.substr(5), ','));
      }
      continue;
    }
    if (!seen_columns && (row.starts_with("from,") || row == "from,to")) {
      seen_columns = true;
      continue;
    }
    auto fields = detail::split(row, ',');
    if (fields.size() != 2 && fields.size() != 3)
      throw ParseError(line, "expected from,to[,weight]");
    edge_rows.emplace_back(line, std::move(fields));
  }

  const auto flag = [&](const char* name) {
    const auto it = header.flags.find(name);
    return it != header.flags.end() && it->second == "1";
  };

  if (header.kind == "message") {
    std::vector<NodeMeta> nodes;
    for (const auto& [line, f] : node_rows) {
      if (f.size() != 5) throw ParseError(line, "message node needs index,message_id,source_id,timestamp,rating");
      if (csv_value<std::size_t>(f[0], line, "node index") != nodes.size())
        throw ParseError(line, "node indices must be consecutive from 0");
      nodes.push_back({std::string(f[1]), std::string(f[2]),
                       csv_value<Timestamp>(f[3], line, "timestamp"),
                       csv_value<double>(f[4], line, "rating")});
    }
    std::vector<Edge> edges;
    for (const auto& [line, f] : edge_rows) {
      const Edge e{csv_value<std::size_t>(f[0], line, "node index"),
                   csv_value<std::size_t>(f[1], line, "node index")};
      if (e.from >= nodes.size() || e.to >= nodes.size())
        throw ParseError(line, "edge references an undeclared node");
      edges.push_back(e);
    }
    const auto o = header.flags.find("orientation");
    const bool symmetric = o != header.flags.end() && o->second == "symmetric";
    MessageGraph g(std::move(nodes), std::move(edges),
                   symmetric ? MessageGraph::Orientation::Symmetric
                             : MessageGraph::Orientation::Backward);
    g.set_time_window_extension(flag("time_window_extension"));
    return g;
  }
  if (header.kind != "source")
    throw ParseError(1, "unknown graph kind '" + header.kind + "'");

  std::vector<SourceNode> nodes;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& [line, f] : node_rows) {
    if (f.size() != 4) throw ParseError(line, "source node needs id,earliest_timestamp,rating,message_count");
    if (!valid_source_id(f[0])) throw ParseError(line, "invalid source id");
    if (!index.emplace(std::string(f[0]), nodes.size()).second)
      throw ParseError(line, "duplicate node '" + std::string(f[0]) + "'");
    nodes.push_back({std::string(f[0]), csv_value<Timestamp>(f[1], line, "timestamp"),
                     csv_value<double>(f[2], line, "rating"),
                     csv_value<std::size_t>(f[3], line, "message count")});
  }
  const auto node_for = [&](std::string_view id, std::size_t line) {
    if (!valid_source_id(id)) throw ParseError(line, "invalid source id '" + std::string(id) + "'");
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    index.emplace(std::string(id), nodes.size());
    nodes.push_back({std::string(id), 0, 1.0, 1});
    return nodes.size() - 1;
  };
  std::vector<WeightedEdge> edges;
  for (const auto& [line, f] : edge_rows) {
    WeightedEdge e{node_for(detail::trim(f[0]), line), node_for(detail::trim(f[1]), line), 1};
    if (f.size() == 3) e.weight = csv_value<std::size_t>(f[2], line, "weight");
    if (e.weight == 0) throw ParseError(line, "weight must be positive");
    edges.push_back(e);
  }
  SourceGraph g(std::move(nodes), std::move(edges),
                options.allow_self_loops || flag("self_loops"));
  if (const auto it = header.flags.find("dropped_self_loops"); it != header.flags.end())
    g.set_dropped_self_loops(csv_value<std::size_t>(it->second, 1, "dropped_self_loops"));
  return g;
}

// --- DOT / GraphML ------------------------------------------------------------

std::string dot(const MessageGraph& g) {
  std::ostringstream out;
  out << "digraph thvg {\n";
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const auto& m = g.nodes()[k];
    out << "  " << k << " [label=" << json_string(m.message_id)
        << ", source=" << json_string(m.source_id) << ", timestamp=" << m.timestamp
        << ", rating=" << detail::exact(m.rating) << "];\n";
  }
  for (const auto& e : g.edges())
    out << "  " << e.from << " -> " << e.to << " [weight=1];\n";
  out << "}\n";
  return out.str();
}

std::string dot(const SourceGraph& g) {
  std::ostringstream out;
  out << "digraph thvg {\n";
  for (const auto& s : g.nodes())
    out << "  " << json_string(s.source_id) << " [earliest_timestamp="
        << s.earliest_timestamp << ", rating=" << detail::exact(s.rating)
        << ", messages=" << s.message_count << "];\n";
  for (const auto& e : g.edges())
    out << "  " << json_string(g.nodes()[e.from].source_id) << " -> "
        << json_string(g.nodes()[e.to].source_id) << " [weight=" << e.weight
        << "];\n";
  out << "}\n";
  return out.str();
}

constexpr std::string_view kGraphMlHead =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";

std::string graphml(const MessageGraph& g) {
  std::ostringstream out;
  out << kGraphMlHead
      << "  <key id=\"message_id\" for=\"node\" attr.name=\"message_id\" attr.type=\"string\"/>\n"
      << "  <key id=\"source_id\" for=\"node\" attr.name=\"source_id\" attr.type=\"string\"/>\n"
      << "  <key id=\"timestamp\" for=\"node\" attr.name=\"timestamp\" attr.type=\"long\"/>\n"
      << "  <key id=\"rating\" for=\"node\" attr.name=\"rating\" attr.type=\"double\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      << "  <graph id=\"thvg\" edgedefault=\"directed\">\n";
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const auto& m = g.nodes()[k];
    out << "    <node id=\"n" << k << "\">"
        << "<data key=\"message_id\">" << xml_escape(m.message_id) << "</data>"
        << "<data key=\"source_id\">" << xml_escape(m.source_id) << "</data>"
        << "<data key=\"timestamp\">" << m.timestamp << "</data>"
        << "<data key=\"rating\">" << detail::exact(m.rating) << "</data></node>\n";
  }
  for (const auto& e : g.edges())
    out << "    <edge source=\"n" << e.from << "\" target=\"n" << e.to
        << "\"><data key=\"weight\">1</data></edge>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string graphml(const SourceGraph& g) {
  std::ostringstream out;
  out << kGraphMlHead
      << "  <key id=\"earliest_timestamp\" for=\"node\" attr.name=\"earliest_timestamp\" attr.type=\"long\"/>\n"
      << "  <key id=\"rating\" for=\"node\" attr.name=\"rating\" attr.type=\"double\"/>\n"
      << "  <key id=\"messages\" for=\"node\" attr.name=\"messages\" attr.type=\"int\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      << "  <graph id=\"thvg\" edgedefault=\"directed\">\n";
  for (const auto& s : g.nodes())
    out << "    <node id=\"" << xml_escape(s.source_id) << "\">"
        << "<data key=\"earliest_timestamp\">" << s.earliest_timestamp << "</data>"
        << "<data key=\"rating\">" << detail::exact(s.rating) << "</data>"
        << "<data key=\"messages\">" << s.message_count << "</data></node>\n";
  for (const auto& e : g.edges())
    out << "    <edge source=\"" << xml_escape(g.nodes()[e.from].source_id)
        << "\" target=\"" << xml_escape(g.nodes()[e.to].source_id)
        << "\"><data key=\"weight\">" << e.weight << "</data></edge>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

template <typename Graph>
std::string export_any(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: return dot(g);
    case GraphFormat::GraphMl: return graphml(g);
    case GraphFormat::EdgeCsv: return edge_csv(g);
    case GraphFormat::AdjJson: return adj_json(g);
  }
  throw ConfigError("unknown graph format");
}

}  // namespace

GraphFormat parse_graph_format(std::string_view s) {
  if (s == "dot") return GraphFormat::Dot;
  if (s == "graphml") return GraphFormat::GraphMl;
  if (s == "edge_csv" || s == "csv") return GraphFormat::EdgeCsv;
  if (s == "adj_json" || s == "json") return GraphFormat::AdjJson;
  throw ConfigError("unknown graph format '" + std::string(s) + "'");
}

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::Dot: return "dot";
    case GraphFormat::GraphMl: return "graphml";
    case GraphFormat::EdgeCsv: return "edge_csv";
    case GraphFormat::AdjJson: return "adj_json";
  }
  return "?";
}

std::string export_graph(const MessageGraph& graph, GraphFormat format) {
  return export_any(graph, format);
}

std::string export_graph(const SourceGraph& graph, GraphFormat format) {
  return export_any(graph, format);
}

std::string export_graph(const AnyGraph& graph, GraphFormat format) {
  return std::visit([&](const auto& g) { return export_any(g, format); }, graph);
}

AnyGraph import_graph(std::string_view text, GraphFormat format,
                      const ImportOptions& options) {
  switch (format) {
    case GraphFormat::AdjJson: return import_adj_json(text, options);
    case GraphFormat::EdgeCsv: return import_edge_csv(text, options);
    default:
      throw ConfigError("importing " + std::string(to_string(format)) +
                        " is not supported");
  }
}

SourceGraph import_source_graph(std::string_view text, GraphFormat format,
                                const ImportOptions& options) {
  auto g = import_graph(text, format, options);
  if (auto* s = std::get_if<SourceGraph>(&g)) return std::move(*s);
  throw ParseError(0, "field 'kind': expected a source graph, found a message graph");
}

MessageGraph import_message_graph(std::string_view text, GraphFormat format,
                                  const ImportOptions& options) {
  auto g = import_graph(text, format, options);
  if (auto* m = std::get_if<MessageGraph>(&g)) return std::move(*m);
  throw ParseError(0, "field 'kind': expected a message graph, found a source graph");
}

}  // namespace thvg
