#include "ivc/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "ivc/error.hpp"

namespace ivc {

namespace {

std::string describe(GridVertex v) {
  std::ostringstream os;
  os << "(" << v.layer << "," << v.ring << ")";
  return os.str();
}

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const MeshGraph& g, VertexId source) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<VertexId> queue;
  dist[static_cast<size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(u)) {
      auto& d = dist[static_cast<size_t>(inc.neighbor)];
      if (d < 0) {
        d = dist[static_cast<size_t>(u)] + 1;
        queue.push(inc.neighbor);
      }
    }
  }
  return dist;
}

}  // namespace

Edge Edge::make(GridVertex a, GridVertex b) {
  if (a == b) {
    throw Error(ErrorCode::InvalidParameter, "loop at vertex " + describe(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::Path: return "path";
    case Family::EvenCycle: return "cycle";
    case Family::Cylinder: return "cylinder";
    case Family::Torus: return "torus";
    case Family::Product: return "product";
  }
  return "product";
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::EvenCycle;
  if (name == "cylinder") return Family::Cylinder;
  if (name == "torus") return Family::Torus;
  if (name == "product") return Family::Product;
  return std::nullopt;
}

MeshGraph MeshGraph::from_edges(Family family, int m, int n, int layers,
                                int ring_length, std::vector<Edge> edges) {
  if (layers < 1 || ring_length < 1) {
    throw Error(ErrorCode::InvalidParameter, "grid dimensions must be positive");
  }
  MeshGraph g;
  g.family_ = family;
  g.m_ = m;
  g.n_ = n;
  g.layers_ = layers;
  g.ring_length_ = ring_length;

  for (auto& e : edges) {
    if (!g.contains(e.u) || !g.contains(e.v)) {
      throw Error(ErrorCode::InvalidVertex,
                  "edge " + describe(e.u) + "-" + describe(e.v) + " leaves the grid");
    }
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::InvalidParameter,
                "multiple edge " + describe(dup->u) + "-" + describe(dup->v));
  }
  g.edges_ = std::move(edges);

  g.incidence_.resize(static_cast<size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId a = g.id(g.edges_[static_cast<size_t>(e)].u);
    const VertexId b = g.id(g.edges_[static_cast<size_t>(e)].v);
    g.incidence_[static_cast<size_t>(a)].push_back({b, e});
    g.incidence_[static_cast<size_t>(b)].push_back({a, e});
  }
  for (auto& list : g.incidence_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  }
  return g;
}

bool MeshGraph::contains(GridVertex v) const noexcept {
  return v.layer >= 1 && v.layer <= layers_ && v.ring >= 1 && v.ring <= ring_length_;
}

VertexId MeshGraph::id(GridVertex v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + describe(v) + " is not in the graph");
  }
  return (v.layer - 1) * ring_length_ + (v.ring - 1);
}

GridVertex MeshGraph::vertex(VertexId id) const noexcept {
  return {id / ring_length_ + 1, id % ring_length_ + 1};
}

std::optional<EdgeId> MeshGraph::find_edge(GridVertex a, GridVertex b) const {
  if (a == b) return std::nullopt;
  const Edge key = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

MeshGraph build_path(int m) {
  if (m < 1) {
    throw Error(ErrorCode::InvalidParameter, "path needs m >= 1");
  }
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back(Edge::make({i, 1}, {i + 1, 1}));
  return MeshGraph::from_edges(Family::Path, m, 0, m, 1, std::move(edges));
}

MeshGraph build_even_cycle(int k) {
  if (k < 4 || k % 2 != 0) {
    throw Error(ErrorCode::InvalidParameter,
                "cycle length must be even and at least 4, got " + std::to_string(k));
  }
  std::vector<Edge> edges;
  for (int j = 1; j < k; ++j) edges.push_back(Edge::make({1, j}, {1, j + 1}));
  edges.push_back(Edge::make({1, 1}, {1, k}));
  return MeshGraph::from_edges(Family::EvenCycle, 1, k / 2, 1, k, std::move(edges));
}

MeshGraph cartesian_product(const MeshGraph& g1, const MeshGraph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n1 * g2.edge_count() + n2 * g1.edge_count()));
  // u1 = v1 and (u2, v2) in E2
  for (VertexId a = 0; a < n1; ++a) {
    for (EdgeId e = 0; e < g2.edge_count(); ++e) {
      edges.push_back(Edge::make({a + 1, g2.tail(e) + 1}, {a + 1, g2.head(e) + 1}));
    }
  }
  // u2 = v2 and (u1, v1) in E1
  for (VertexId b = 0; b < n2; ++b) {
    for (EdgeId e = 0; e < g1.edge_count(); ++e) {
      edges.push_back(Edge::make({g1.tail(e) + 1, b + 1}, {g1.head(e) + 1, b + 1}));
    }
  }
  return MeshGraph::from_edges(Family::Product, n1, n2, n1, n2, std::move(edges));
}

namespace {

std::vector<Edge> ring_edges(int layers, int ring_length) {
  std::vector<Edge> edges;
  for (int i = 1; i <= layers; ++i) {
    for (int j = 1; j < ring_length; ++j) edges.push_back(Edge::make({i, j}, {i, j + 1}));
    edges.push_back(Edge::make({i, 1}, {i, ring_length}));
  }
  return edges;
}

}  // namespace

MeshGraph build_cylinder(int m, int n) {
  if (m < 1 || n < 2) {
    throw Error(ErrorCode::InvalidParameter,
                "cylinder needs m >= 1 and n >= 2, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  auto edges = ring_edges(m, 2 * n);
  for (int j = 1; j <= 2 * n; ++j) {
    for (int i = 1; i < m; ++i) edges.push_back(Edge::make({i, j}, {i + 1, j}));
  }
  return MeshGraph::from_edges(Family::Cylinder, m, n, m, 2 * n, std::move(edges));
}

MeshGraph build_torus(int m, int n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::InvalidParameter,
                "torus needs m >= 2 and n >= 2, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  auto edges = ring_edges(2 * m, 2 * n);
  for (int j = 1; j <= 2 * n; ++j) {
    for (int i = 1; i < 2 * m; ++i) edges.push_back(Edge::make({i, j}, {i + 1, j}));
    edges.push_back(Edge::make({1, j}, {2 * m, j}));
  }
  return MeshGraph::from_edges(Family::Torus, m, n, 2 * m, 2 * n, std::move(edges));
}

MeshGraph build_family(Family family, int m, int n) {
  switch (family) {
    case Family::Path: return build_path(m);
    case Family::EvenCycle: return build_even_cycle(2 * n);
    case Family::Cylinder: return build_cylinder(m, n);
    case Family::Torus: return build_torus(m, n);
    case Family::Product: break;
  }
  throw Error(ErrorCode::InvalidParameter, "product graphs are built from two factors");
}

int max_degree(const MeshGraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const MeshGraph& g) {
  int best = g.vertex_count() > 0 ? g.degree(0) : 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_regular(const MeshGraph& g) { return min_degree(g) == max_degree(g); }

bool is_bipartite(const MeshGraph& g) {
  std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[static_cast<size_t>(root)] >= 0) continue;
    side[static_cast<size_t>(root)] = 0;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(u)) {
        auto& s = side[static_cast<size_t>(inc.neighbor)];
        if (s < 0) {
          s = 1 - side[static_cast<size_t>(u)];
          queue.push(inc.neighbor);
        } else if (s == side[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const MeshGraph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const MeshGraph& g) {
  int best = 0;
  for (VertexId source = 0; source < g.vertex_count(); ++source) {
    for (int d : bfs_distances(g, source)) {
      if (d < 0) throw Error(ErrorCode::NoFiniteDiameter, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace ivc
