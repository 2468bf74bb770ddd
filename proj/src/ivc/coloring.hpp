#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

/// Total assignment of integer colors to the edges of a graph, indexed by
/// EdgeId, together with a declared palette size t.
///
/// Colors outside [1, t] are representable so that damaged or foreign
/// colorings can be diagnosed by verify_interval instead of rejected on load.
class EdgeColoring {
 public:
  /// Throws InvalidColoring unless `colors` has one entry per edge and
  /// `palette_size` >= 1.
  EdgeColoring(std::shared_ptr<const MeshGraph> graph, std::vector<int> colors,
               int palette_size);

  const MeshGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const MeshGraph>& graph_ptr() const noexcept { return graph_; }
  int palette_size() const noexcept { return palette_size_; }

  std::span<const int> colors() const noexcept { return colors_; }
  int color(EdgeId e) const { return colors_.at(static_cast<size_t>(e)); }
  /// Throws InvalidVertex for unknown vertices, InvalidParameter for non-edges.
  int color(GridVertex a, GridVertex b) const;

  EdgeColoring with_color(EdgeId e, int color) const;

 private:
  std::shared_ptr<const MeshGraph> graph_;
  std::vector<int> colors_;
  int palette_size_;
};

/// S(v): sorted, duplicate-free colors on the edges at `v`.
std::vector<int> spectrum(const EdgeColoring& c, GridVertex v);

bool is_proper(const EdgeColoring& c);
/// Used colors are exactly {1, ..., t}.
bool is_surjective(const EdgeColoring& c);

struct VertexSpectrum {
  GridVertex vertex;
  int degree = 0;
  std::vector<int> colors;
  int min = 0;  // 0 when the vertex is isolated
  int max = 0;
  bool proper = true;      // |S(v)| == d(v)
  bool in_palette = true;  // S(v) within [1, t]
  bool is_interval = true; // S(v) == {min, ..., min + d(v) - 1}
};

struct SpectrumReport {
  int palette_size = 0;
  std::vector<VertexSpectrum> vertices;  // row-major vertex order
  std::vector<int> missing_colors;       // colors in [1, t] used by no edge
  std::vector<int> foreign_colors;       // used colors outside [1, t]
  bool proper = true;
  bool surjective = true;
  bool interval = true;

  /// Vertices whose own spectrum breaks properness, the palette, or
  /// consecutiveness.
  std::vector<GridVertex> violations() const;
  const VertexSpectrum& at(GridVertex v) const;
};

/// Never throws on a bad coloring; the report carries the diagnosis.
SpectrumReport verify_interval(const EdgeColoring& c);

/// Shifts all colors so the smallest used color is 1 and sets t to the
/// largest shifted color.
EdgeColoring normalize(const EdgeColoring& c);

/// c -> t + 1 - c.
EdgeColoring reverse_colors(const EdgeColoring& c);

}  // namespace ivc
