#include "ivc/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "ivc/error.hpp"

namespace ivc {

EdgeColoring::EdgeColoring(std::shared_ptr<const MeshGraph> graph, std::vector<int> colors,
                           int palette_size)
    : graph_(std::move(graph)), colors_(std::move(colors)), palette_size_(palette_size) {
  if (!graph_) {
    throw Error(ErrorCode::InvalidColoring, "coloring without a graph");
  }
  if (static_cast<int>(colors_.size()) != graph_->edge_count()) {
    std::ostringstream os;
    os << "coloring covers " << colors_.size() << " edges, graph has " << graph_->edge_count();
    throw Error(ErrorCode::InvalidColoring, os.str());
  }
  if (palette_size_ < 1) {
    throw Error(ErrorCode::InvalidColoring, "palette size must be at least 1");
  }
}

int EdgeColoring::color(GridVertex a, GridVertex b) const {
  graph_->id(a);
  graph_->id(b);
  auto e = graph_->find_edge(a, b);
  if (!e) {
    std::ostringstream os;
    os << "no edge between (" << a.layer << "," << a.ring << ") and (" << b.layer << ","
       << b.ring << ")";
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  return color(*e);
}

EdgeColoring EdgeColoring::with_color(EdgeId e, int color) const {
  auto colors = colors_;
  colors.at(static_cast<size_t>(e)) = color;
  return EdgeColoring(graph_, std::move(colors), palette_size_);
}

std::vector<int> spectrum(const EdgeColoring& c, GridVertex v) {
  const MeshGraph& g = c.graph();
  std::vector<int> s;
  for (const auto& inc : g.incident(g.id(v))) s.push_back(c.color(inc.edge));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_proper(const EdgeColoring& c) {
  const MeshGraph& g = c.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(spectrum(c, g.vertex(v)).size()) != g.degree(v)) return false;
  }
  return true;
}

bool is_surjective(const EdgeColoring& c) {
  std::vector<int> used(c.colors().begin(), c.colors().end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (static_cast<int>(used.size()) != c.palette_size()) return false;
  return used.front() == 1 && used.back() == c.palette_size();
}

std::vector<GridVertex> SpectrumReport::violations() const {
  std::vector<GridVertex> out;
  for (const auto& vs : vertices) {
    if (!vs.proper || !vs.in_palette || !vs.is_interval) out.push_back(vs.vertex);
  }
  return out;
}

const VertexSpectrum& SpectrumReport::at(GridVertex v) const {
  auto it = std::find_if(vertices.begin(), vertices.end(),
                         [&](const VertexSpectrum& vs) { return vs.vertex == v; });
  if (it == vertices.end()) {
    throw Error(ErrorCode::InvalidVertex, "vertex not in report");
  }
  return *it;
}

SpectrumReport verify_interval(const EdgeColoring& c) {
  const MeshGraph& g = c.graph();
  const int t = c.palette_size();
  SpectrumReport report;
  report.palette_size = t;
  report.vertices.reserve(static_cast<size_t>(g.vertex_count()));

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexSpectrum vs;
    vs.vertex = g.vertex(v);
    vs.degree = g.degree(v);
    vs.colors = spectrum(c, vs.vertex);
    if (!vs.colors.empty()) {
      vs.min = vs.colors.front();
      vs.max = vs.colors.back();
    }
    vs.proper = static_cast<int>(vs.colors.size()) == vs.degree;
    vs.in_palette = vs.colors.empty() || (vs.min >= 1 && vs.max <= t);
    // A duplicate-free sorted set of d integers spanning d - 1 is a run.
    vs.is_interval = vs.proper && (vs.degree == 0 || vs.max - vs.min == vs.degree - 1);
    report.proper = report.proper && vs.proper;
    report.vertices.push_back(std::move(vs));
  }

  std::vector<char> seen(static_cast<size_t>(t) + 1, 0);
  for (int color : c.colors()) {
    if (color >= 1 && color <= t) {
      seen[static_cast<size_t>(color)] = 1;
    } else {
      report.foreign_colors.push_back(color);
    }
  }
  std::sort(report.foreign_colors.begin(), report.foreign_colors.end());
  report.foreign_colors.erase(
      std::unique(report.foreign_colors.begin(), report.foreign_colors.end()),
      report.foreign_colors.end());
  for (int color = 1; color <= t; ++color) {
    if (!seen[static_cast<size_t>(color)]) report.missing_colors.push_back(color);
  }
  report.surjective = report.missing_colors.empty() && report.foreign_colors.empty();

  const bool all_runs = std::all_of(report.vertices.begin(), report.vertices.end(),
                                    [](const VertexSpectrum& vs) {
                                      return vs.is_interval && vs.in_palette;
                                    });
  report.interval = report.proper && report.surjective && all_runs;
  return report;
}

EdgeColoring normalize(const EdgeColoring& c) {
  if (c.colors().empty()) return c;
  const auto [lo, hi] = std::minmax_element(c.colors().begin(), c.colors().end());
  const int shift = *lo - 1;
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  for (int& color : colors) color -= shift;
  return EdgeColoring(c.graph_ptr(), std::move(colors), *hi - shift);
}

EdgeColoring reverse_colors(const EdgeColoring& c) {
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  for (int& color : colors) color = c.palette_size() + 1 - color;
  return EdgeColoring(c.graph_ptr(), std::move(colors), c.palette_size());
}

}  // namespace ivc
