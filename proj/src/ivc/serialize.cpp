#include "ivc/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>

#include "ivc/error.hpp"
#include "json.hpp"

namespace ivc {

using nlohmann::json;

namespace {

json vertex_json(GridVertex v) { return json::array({v.layer, v.ring}); }

GridVertex vertex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::SchemaError, "vertex must be [layer, ring], got " + j.dump());
  }
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json graph_document(const MeshGraph& g) {
  json doc;
  doc["family"] = to_string(g.family());
  doc["m"] = g.m();
  doc["n"] = g.n();
  doc["layers"] = g.layers();
  doc["ring"] = g.ring_length();
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(vertex_json(g.vertex(v)));
  doc["vertices"] = std::move(vertices);
  return doc;
}

std::string dot_name(GridVertex v) {
  return "x_" + std::to_string(v.ring) + "_" + std::to_string(v.layer);
}

}  // namespace

std::string graph_to_json(const MeshGraph& g) {
  json doc = graph_document(g);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({vertex_json(e.u), vertex_json(e.v)}));
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string coloring_to_json(const EdgeColoring& c, const std::vector<int>& rule_trace) {
  const MeshGraph& g = c.graph();
  json doc = graph_document(g);
  doc["t"] = c.palette_size();
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json entry;
    entry["edge"] = json::array({vertex_json(g.edge(e).u), vertex_json(g.edge(e).v)});
    entry["color"] = c.color(e);
    if (!rule_trace.empty()) entry["rule"] = rule_trace.at(static_cast<size_t>(e));
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

LoadedColoring coloring_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  try {
    const auto family = family_from_string(doc.at("family").get<std::string>());
    if (!family) throw Error(ErrorCode::SchemaError, "unknown family " + doc.at("family").dump());
    const int m = doc.at("m").get<int>();
    const int n = doc.at("n").get<int>();
    const int t = doc.at("t").get<int>();

    int layers = 0;
    int ring = 0;
    std::vector<GridVertex> vertices;
    for (const auto& jv : doc.at("vertices")) {
      vertices.push_back(vertex_from(jv));
      layers = std::max(layers, vertices.back().layer);
      ring = std::max(ring, vertices.back().ring);
    }
    std::sort(vertices.begin(), vertices.end());
    bool full_grid = static_cast<int>(vertices.size()) == layers * ring;
    for (size_t k = 0; full_grid && k < vertices.size(); ++k) {
      const GridVertex want{static_cast<int>(k) / ring + 1, static_cast<int>(k) % ring + 1};
      full_grid = vertices[k] == want;
    }
    if (!full_grid) {
      throw Error(ErrorCode::SchemaError, "vertex list is not a full [1..L]x[1..R] grid");
    }

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::pair<int, int>>> entries;  // edge -> (color, rule)
    bool has_rules = true;
    for (const auto& je : doc.at("edges")) {
      const auto& ends = je.at("edge");
      if (!ends.is_array() || ends.size() != 2) {
        throw Error(ErrorCode::SchemaError, "edge must be a pair of vertices, got " + ends.dump());
      }
      const Edge edge = Edge::make(vertex_from(ends.at(0)), vertex_from(ends.at(1)));
      const int rule = je.contains("rule") ? je.at("rule").get<int>() : 0;
      has_rules = has_rules && je.contains("rule");
      edges.push_back(edge);
      entries.push_back({edge, {je.at("color").get<int>(), rule}});
    }

    auto graph = std::make_shared<const MeshGraph>(
        MeshGraph::from_edges(*family, m, n, layers, ring, edges));
    if (*family != Family::Product) {
      const MeshGraph expected = build_family(*family, m, n);
      if (expected.layers() != layers || expected.ring_length() != ring ||
          !std::equal(expected.edges().begin(), expected.edges().end(), graph->edges().begin(),
                      graph->edges().end())) {
        throw Error(ErrorCode::SchemaError,
                    std::string("edges do not form the ") + to_string(*family) + " graph for m=" +
                        std::to_string(m) + " n=" + std::to_string(n));
      }
    }

    std::vector<int> colors(static_cast<size_t>(graph->edge_count()));
    std::vector<int> rules(colors.size());
    for (const auto& [edge, value] : entries) {
      const auto e = static_cast<size_t>(*graph->find_edge(edge.u, edge.v));
      colors[e] = value.first;
      rules[e] = value.second;
    }
    if (!has_rules || entries.empty()) rules.clear();
    return {EdgeColoring(graph, std::move(colors), t), std::move(rules)};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

std::string report_to_json(const SpectrumReport& report) {
  json doc;
  doc["t"] = report.palette_size;
  doc["proper"] = report.proper;
  doc["surjective"] = report.surjective;
  doc["interval"] = report.interval;
  doc["missing_colors"] = report.missing_colors;
  doc["foreign_colors"] = report.foreign_colors;
  json violations = json::array();
  for (GridVertex v : report.violations()) violations.push_back(vertex_json(v));
  doc["violations"] = std::move(violations);
  json vertices = json::array();
  for (const auto& vs : report.vertices) {
    vertices.push_back({{"vertex", vertex_json(vs.vertex)},
                        {"degree", vs.degree},
                        {"spectrum", vs.colors},
                        {"min", vs.min},
                        {"max", vs.max},
                        {"proper", vs.proper},
                        {"in_palette", vs.in_palette},
                        {"interval", vs.is_interval}});
  }
  doc["vertices"] = std::move(vertices);
  return doc.dump() + "\n";
}

std::string report_to_text(const SpectrumReport& report) {
  std::ostringstream os;
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  os << "palette t     " << report.palette_size << "\n"
     << "proper        " << yes_no(report.proper) << "\n"
     << "surjective    " << yes_no(report.surjective) << "\n"
     << "interval      " << yes_no(report.interval) << "\n";
  if (!report.missing_colors.empty()) {
    os << "missing       ";
    for (int c : report.missing_colors) os << c << ' ';
    os << "\n";
  }
  if (!report.foreign_colors.empty()) {
    os << "outside [1,t] ";
    for (int c : report.foreign_colors) os << c << ' ';
    os << "\n";
  }
  os << "\n  vertex      deg  spectrum\n";
  for (const auto& vs : report.vertices) {
    std::ostringstream name;
    name << "(" << vs.vertex.layer << "," << vs.vertex.ring << ")";
    std::ostringstream spec;
    spec << "{";
    for (size_t k = 0; k < vs.colors.size(); ++k) spec << (k ? "," : "") << vs.colors[k];
    spec << "}";
    const bool bad = !vs.proper || !vs.in_palette || !vs.is_interval;
    os << (bad ? "* " : "  ") << std::left << std::setw(12) << name.str() << std::setw(5)
       << vs.degree << spec.str() << "\n";
  }
  return os.str();
}

std::string coloring_to_dot(const EdgeColoring& c) {
  const MeshGraph& g = c.graph();
  std::ostringstream os;
  os << "graph " << to_string(g.family()) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << dot_name(g.vertex(v)) << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  " << dot_name(g.edge(e).u) << " -- " << dot_name(g.edge(e).v) << " [label=\""
       << c.color(e) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string coloring_to_csv(const EdgeColoring& c, const std::vector<int>& rule_trace) {
  const MeshGraph& g = c.graph();
  const bool rules = !rule_trace.empty();
  std::ostringstream os;
  os << "u_layer,u_ring,v_layer,v_ring," << (rules ? "rule," : "") << "color\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    os << edge.u.layer << ',' << edge.u.ring << ',' << edge.v.layer << ',' << edge.v.ring << ',';
    if (rules) os << rule_trace.at(static_cast<size_t>(e)) << ',';
    os << c.color(e) << '\n';
  }
  return os.str();
}

}  // namespace ivc
