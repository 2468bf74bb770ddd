#pragma once

#include <string>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

/// A coloring read back from JSON. `rule_trace` is empty unless every edge
/// entry carried a "rule" field.
struct LoadedColoring {
  EdgeColoring coloring;
  std::vector<int> rule_trace;
};

/// {"family","m","n","layers","ring","vertices":[[i,j],...],
///  "edges":[[[i1,j1],[i2,j2]],...]}, canonically ordered.
std::string graph_to_json(const MeshGraph& g);

/// Graph document plus top-level "t"; "edges" entries become
/// {"edge":[[i1,j1],[i2,j2]],"color":c[,"rule":r]}.
std::string coloring_to_json(const EdgeColoring& c, const std::vector<int>& rule_trace = {});

/// Throws ParseError (malformed JSON, with location) or SchemaError (missing
/// fields, vertex list not a full grid, or edges that do not match the named
/// family's graph).
LoadedColoring coloring_from_json(const std::string& text);

std::string report_to_json(const SpectrumReport& report);
std::string report_to_text(const SpectrumReport& report);

/// Undirected DOT graph, vertices named x_<ring>_<layer>, edges labeled with
/// their color.
std::string coloring_to_dot(const EdgeColoring& c);

/// One row per edge: u_layer,u_ring,v_layer,v_ring[,rule],color.
std::string coloring_to_csv(const EdgeColoring& c, const std::vector<int>& rule_trace = {});

}  // namespace ivc
