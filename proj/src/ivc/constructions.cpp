#include "ivc/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "ivc/error.hpp"

namespace ivc {

namespace {

std::string describe_spectrum(const VertexSpectrum& vs) {
  std::ostringstream os;
  os << "vertex (" << vs.vertex.layer << "," << vs.vertex.ring << ") of degree " << vs.degree
     << " has spectrum {";
  for (size_t k = 0; k < vs.colors.size(); ++k) os << (k ? "," : "") << vs.colors[k];
  os << "}";
  return os.str();
}

// Collects rule applications and rejects conflicting double assignments.
class RuleAssigner {
 public:
  explicit RuleAssigner(std::shared_ptr<const MeshGraph> graph)
      : graph_(std::move(graph)),
        colors_(static_cast<size_t>(graph_->edge_count()), 0),
        trace_(static_cast<size_t>(graph_->edge_count()), 0) {}

  void assign(GridVertex a, GridVertex b, int color, int rule) {
    auto e = graph_->find_edge(a, b);
    if (!e) {
      std::ostringstream os;
      os << "rule " << rule << " names a non-edge (" << a.layer << "," << a.ring << ")-("
         << b.layer << "," << b.ring << ")";
      throw Error(ErrorCode::ConstructionFailed, os.str());
    }
    auto idx = static_cast<size_t>(*e);
    if (trace_[idx] != 0) {
      // Only a mirrored instance of the same rule may revisit an edge.
      if (trace_[idx] != rule || colors_[idx] != color) {
        std::ostringstream os;
        os << "edge (" << a.layer << "," << a.ring << ")-(" << b.layer << "," << b.ring
           << ") colored " << colors_[idx] << " by rule " << trace_[idx] << " and " << color
           << " by rule " << rule;
        throw Error(ErrorCode::ConstructionFailed, os.str());
      }
      ++overlaps_;
      return;
    }
    colors_[idx] = color;
    trace_[idx] = rule;
  }

  ConstructionResult finish(int claimed_t) {
    for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
      if (trace_[static_cast<size_t>(e)] == 0) {
        const Edge& edge = graph_->edge(e);
        std::ostringstream os;
        os << "no rule colors edge (" << edge.u.layer << "," << edge.u.ring << ")-("
           << edge.v.layer << "," << edge.v.ring << ")";
        throw Error(ErrorCode::ConstructionFailed, os.str());
      }
    }
    EdgeColoring coloring(graph_, std::move(colors_), claimed_t);
    check_interval(coloring);
    return {std::move(coloring), claimed_t, std::move(trace_), overlaps_};
  }

  static void check_interval(const EdgeColoring& coloring) {
    const auto report = verify_interval(coloring);
    if (report.interval) return;
    auto bad = report.violations();
    if (!bad.empty()) {
      throw Error(ErrorCode::ConstructionFailed, describe_spectrum(report.at(bad.front())));
    }
    throw Error(ErrorCode::ConstructionFailed,
                "palette " + std::to_string(coloring.palette_size()) + " is not fully used");
  }

 private:
  std::shared_ptr<const MeshGraph> graph_;
  std::vector<int> colors_;
  std::vector<int> trace_;
  int overlaps_ = 0;
};

// Rules for m <= n, indices exactly as x_j^(i).
ConstructionResult torus_coloring_ordered(int m, int n) {
  auto graph = std::make_shared<const MeshGraph>(build_torus(m, n));
  RuleAssigner rules(graph);
  const auto x = [](int i, int j) { return GridVertex{i, j}; };
  const int mirror_base = 2 * m + 1;

  for (int i = 1; i <= m; ++i) {
    const int r = mirror_base - i;
    for (int j = 1; j <= n + 1; ++j) {
      const int color = i + 3 * j - 3;
      rules.assign(x(i, j), x(i, j + 1), color, 1);
      rules.assign(x(r, j), x(r, j + 1), color, 1);
    }
    for (int j = n + 2; j <= 2 * n - 1; ++j) {
      const int color = i - 3 * j + 6 * n + 3;
      rules.assign(x(i, j), x(i, j + 1), color, 2);
      rules.assign(x(r, j), x(r, j + 1), color, 2);
    }
    rules.assign(x(i, 1), x(i, 2 * n), i + 3, 3);
    rules.assign(x(r, 1), x(r, 2 * n), i + 3, 3);

    // At i = m both instances name the edge between layers m and m + 1.
    for (int j = 2; j <= n + 1; ++j) {
      const int color = i + 3 * j - 4;
      rules.assign(x(i, j), x(i + 1, j), color, 4);
      rules.assign(x(2 * m - i, j), x(r, j), color, 4);
    }
    for (int j = n + 2; j <= 2 * n; ++j) {
      const int color = i - 3 * j + 6 * n + 5;
      rules.assign(x(i, j), x(i + 1, j), color, 5);
      rules.assign(x(2 * m - i, j), x(r, j), color, 5);
    }
    rules.assign(x(i, 1), x(i + 1, 1), i + 2, 6);
    rules.assign(x(2 * m - i, 1), x(r, 1), i + 2, 6);
  }
  for (int j = 3; j <= n + 1; ++j) {
    rules.assign(x(1, j), x(2 * m, j), 3 * j - 4, 7);
    rules.assign(x(1, 2 * n + 3 - j), x(2 * m, 2 * n + 3 - j), 3 * j - 4, 7);
  }
  rules.assign(x(1, 1), x(2 * m, 1), 2, 8);
  rules.assign(x(1, 2), x(2 * m, 2), 2, 8);

  return rules.finish(3 * n + m);
}

}  // namespace

int cylinder_palette(int m, int n) { return 3 * m + n - 2; }

int torus_palette(int m, int n) { return std::max(3 * m + n, 3 * n + m); }

ConstructionResult cylinder_coloring(int m, int n) {
  auto graph = std::make_shared<const MeshGraph>(build_cylinder(m, n));
  RuleAssigner rules(graph);
  const auto x = [](int i, int j) { return GridVertex{i, j}; };

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n + 1; ++j) rules.assign(x(i, j), x(i, j + 1), 3 * i + j - 3, 1);
    for (int j = n + 2; j <= 2 * n - 1; ++j) {
      rules.assign(x(i, j), x(i, j + 1), 3 * i - j + 2 * n - 1, 2);
    }
    rules.assign(x(i, 1), x(i, 2 * n), 3 * i - 1, 3);
  }
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = 2; j <= n + 1; ++j) rules.assign(x(i, j), x(i + 1, j), 3 * i + j - 2, 4);
    for (int j = n + 2; j <= 2 * n; ++j) {
      rules.assign(x(i, j), x(i + 1, j), 3 * i - j + 2 * n + 1, 5);
    }
    rules.assign(x(i, 1), x(i + 1, 1), 3 * i, 6);
  }
  return rules.finish(cylinder_palette(m, n));
}

ConstructionResult torus_coloring(int m, int n) {
  if (m < 2 || n < 2) {
    // Same message as the graph builder.
    build_torus(m, n);
  }
  if (m <= n) return torus_coloring_ordered(m, n);

  const ConstructionResult swapped = torus_coloring_ordered(n, m);
  auto graph = std::make_shared<const MeshGraph>(build_torus(m, n));
  const MeshGraph& source = swapped.coloring.graph();
  std::vector<int> colors(static_cast<size_t>(graph->edge_count()));
  std::vector<int> trace(colors.size());
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    const Edge& edge = graph->edge(e);
    auto image = source.find_edge({edge.u.ring, edge.u.layer}, {edge.v.ring, edge.v.layer});
    if (!image) {
      throw Error(ErrorCode::ConstructionFailed, "factor swap does not map edges onto edges");
    }
    colors[static_cast<size_t>(e)] = swapped.coloring.color(*image);
    trace[static_cast<size_t>(e)] = swapped.rule_trace[static_cast<size_t>(*image)];
  }
  EdgeColoring coloring(graph, std::move(colors), swapped.claimed_t);
  RuleAssigner::check_interval(coloring);
  return {std::move(coloring), swapped.claimed_t, std::move(trace), swapped.mirror_overlaps};
}

EdgeColoring step_down(const EdgeColoring& c) {
  const MeshGraph& g = c.graph();
  if (!is_regular(g)) {
    throw Error(ErrorCode::NotRegular, "step-down needs a regular graph");
  }
  const int delta = max_degree(g);
  const int t = c.palette_size();
  if (!verify_interval(c).interval) {
    throw Error(ErrorCode::InvalidColoring, "input is not an interval coloring");
  }
  if (t <= delta) {
    throw Error(ErrorCode::CannotStepDown,
                "palette " + std::to_string(t) + " already equals the degree");
  }
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  std::replace(colors.begin(), colors.end(), t, t - delta);
  return EdgeColoring(c.graph_ptr(), std::move(colors), t - 1);
}

std::vector<EdgeColoring> spectrum_sweep(int m, int n) {
  std::vector<EdgeColoring> out;
  out.push_back(torus_coloring(m, n).coloring);
  while (out.back().palette_size() > 4) out.push_back(step_down(out.back()));
  return out;
}

EdgeColoring torus_coloring_with_palette(int m, int n, int t) {
  if (m < 2 || n < 2) build_torus(m, n);
  const int top = torus_palette(m, n);
  if (t < 4 || t > top) {
    std::ostringstream os;
    os << "t=" << t << " outside the valid interval [4, " << top << "] for T(" << 2 * m
       << "," << 2 * n << ")";
    throw Error(ErrorCode::RangeError, os.str());
  }
  EdgeColoring c = torus_coloring(m, n).coloring;
  while (c.palette_size() > t) c = step_down(c);
  return c;
}

}  // namespace ivc
