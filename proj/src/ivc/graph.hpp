#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ivc {

/// A vertex x_ring^(layer) of a grid-addressed graph. Both coordinates are
/// 1-based.
struct GridVertex {
  int layer = 1;
  int ring = 1;

  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// Undirected edge with endpoints stored in lexicographic (layer, ring) order.
struct Edge {
  GridVertex u;
  GridVertex v;

  /// Throws InvalidParameter for a loop.
  static Edge make(GridVertex a, GridVertex b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Family { Path, EvenCycle, Cylinder, Torus, Product };

const char* to_string(Family family) noexcept;
/// Accepts "path", "cycle", "cylinder", "torus", "product".
std::optional<Family> family_from_string(const std::string& name);

using VertexId = int;
using EdgeId = int;

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Finite simple graph whose vertex set is the full grid
/// [1, layers] x [1, ring_length]. Immutable once built.
class MeshGraph {
 public:
  /// Validates that every edge lies inside the grid, and that there are no
  /// loops or duplicate edges. `m` and `n` are the family parameters
  /// (0 where a parameter does not apply).
  static MeshGraph from_edges(Family family, int m, int n, int layers,
                              int ring_length, std::vector<Edge> edges);

  Family family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int layers() const noexcept { return layers_; }
  int ring_length() const noexcept { return ring_length_; }

  int vertex_count() const noexcept { return layers_ * ring_length_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool contains(GridVertex v) const noexcept;
  /// Throws InvalidVertex when `v` is outside the grid.
  VertexId id(GridVertex v) const;
  GridVertex vertex(VertexId id) const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }
  VertexId tail(EdgeId e) const { return id(edge(e).u); }
  VertexId head(EdgeId e) const { return id(edge(e).v); }
  std::optional<EdgeId> find_edge(GridVertex a, GridVertex b) const;

  int degree(VertexId v) const {
    return static_cast<int>(incidence_.at(static_cast<size_t>(v)).size());
  }
  std::span<const Incidence> incident(VertexId v) const {
    return incidence_.at(static_cast<size_t>(v));
  }

 private:
  MeshGraph() = default;

  Family family_ = Family::Product;
  int m_ = 0;
  int n_ = 0;
  int layers_ = 0;
  int ring_length_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// P_m laid out as vertices (i, 1), i = 1..m.
MeshGraph build_path(int m);
/// C_k laid out as vertices (1, j), j = 1..k. Rejects odd k and k < 4.
MeshGraph build_even_cycle(int k);
/// G1 x G2 with vertex (a, b), where a and b are the 1-based positions of the
/// factor vertices in their graphs' row-major order.
MeshGraph cartesian_product(const MeshGraph& g1, const MeshGraph& g2);
/// C(m, 2n) = P_m x C_2n from the explicit ring and rung edge lists.
MeshGraph build_cylinder(int m, int n);
/// T(2m, 2n) = C_2m x C_2n from the explicit ring and rung edge lists.
MeshGraph build_torus(int m, int n);

/// Dispatch on family. For EvenCycle the cycle length is 2n; for Path the
/// vertex count is m.
MeshGraph build_family(Family family, int m, int n);

int max_degree(const MeshGraph& g);
int min_degree(const MeshGraph& g);
bool is_regular(const MeshGraph& g);
bool is_bipartite(const MeshGraph& g);
bool is_connected(const MeshGraph& g);
/// BFS eccentricity maximum. Throws NoFiniteDiameter when disconnected.
int diameter(const MeshGraph& g);

}  // namespace ivc
