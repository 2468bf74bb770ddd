#include "ivc/search.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <queue>
#include <string>

#include "ivc/bounds.hpp"
#include "ivc/error.hpp"

namespace ivc {

SearchBudget SearchBudget::from_env() {
  SearchBudget budget;
  if (const char* env = std::getenv("IVC_SEARCH_MAX_EDGES")) {
    try {
      budget.max_edges = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError,
                  std::string("IVC_SEARCH_MAX_EDGES is not an integer: ") + env);
    }
  }
  return budget;
}

const char* to_string(SearchOutcome outcome) noexcept {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Absent: return "absent";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "absent";
}

std::vector<EdgeId> bfs_edge_order(const MeshGraph& g) {
  std::vector<EdgeId> order;
  if (g.vertex_count() == 0) return order;
  std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<char> placed(static_cast<size_t>(g.edge_count()), 0);
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (visited[static_cast<size_t>(root)]) continue;
    visited[static_cast<size_t>(root)] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(u)) {
        if (!placed[static_cast<size_t>(inc.edge)]) {
          placed[static_cast<size_t>(inc.edge)] = 1;
          order.push_back(inc.edge);
        }
        if (!visited[static_cast<size_t>(inc.neighbor)]) {
          visited[static_cast<size_t>(inc.neighbor)] = 1;
          queue.push(inc.neighbor);
        }
      }
    }
  }
  return order;
}

namespace {

enum class Step { Found, Exhausted, OutOfBudget };

class Backtracker {
 public:
  Backtracker(const MeshGraph& g, int t, const SearchBudget& budget)
      : g_(g),
        t_(t),
        budget_(budget),
        order_(bfs_edge_order(g)),
        colors_(static_cast<size_t>(g.edge_count()), 0),
        lo_(static_cast<size_t>(g.vertex_count()), INT_MAX),
        hi_(static_cast<size_t>(g.vertex_count()), INT_MIN),
        used_(static_cast<size_t>(g.vertex_count()) * static_cast<size_t>(t + 1), 0),
        color_uses_(static_cast<size_t>(t + 1), 0),
        unused_colors_(t),
        start_(std::chrono::steady_clock::now()) {}

  Step run() { return extend(0); }

  std::int64_t nodes() const { return nodes_; }
  std::vector<int> colors() const { return colors_; }

 private:
  bool used(VertexId v, int c) const {
    return used_[static_cast<size_t>(v) * static_cast<size_t>(t_ + 1) + static_cast<size_t>(c)];
  }
  void set_used(VertexId v, int c, char value) {
    used_[static_cast<size_t>(v) * static_cast<size_t>(t_ + 1) + static_cast<size_t>(c)] = value;
  }

  bool over_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 0xfff) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed > budget_.time_cap) return true;
    }
    return false;
  }

  Step extend(size_t k) {
    if (k == order_.size()) return unused_colors_ == 0 ? Step::Found : Step::Exhausted;
    if (over_budget()) return Step::OutOfBudget;

    const EdgeId e = order_[k];
    const VertexId u = g_.tail(e);
    const VertexId v = g_.head(e);
    // Every vertex spectrum must fit inside a run of d(v) colors.
    int lo = 1;
    int hi = t_;
    for (VertexId w : {u, v}) {
      const auto iw = static_cast<size_t>(w);
      if (lo_[iw] != INT_MAX) {
        lo = std::max(lo, hi_[iw] - g_.degree(w) + 1);
        hi = std::min(hi, lo_[iw] + g_.degree(w) - 1);
      }
    }
    const int remaining_after = static_cast<int>(order_.size() - k - 1);

    for (int c = lo; c <= hi; ++c) {
      if (used(u, c) || used(v, c)) continue;
      const int unused_after = unused_colors_ - (color_uses_[static_cast<size_t>(c)] == 0 ? 1 : 0);
      if (unused_after > remaining_after) continue;
      ++nodes_;

      const auto saved_lo_u = lo_[static_cast<size_t>(u)];
      const auto saved_hi_u = hi_[static_cast<size_t>(u)];
      const auto saved_lo_v = lo_[static_cast<size_t>(v)];
      const auto saved_hi_v = hi_[static_cast<size_t>(v)];
      for (VertexId w : {u, v}) {
        const auto iw = static_cast<size_t>(w);
        lo_[iw] = std::min(lo_[iw], c);
        hi_[iw] = std::max(hi_[iw], c);
        set_used(w, c, 1);
      }
      colors_[static_cast<size_t>(e)] = c;
      ++color_uses_[static_cast<size_t>(c)];
      const int saved_unused = unused_colors_;
      unused_colors_ = unused_after;

      const Step step = extend(k + 1);
      if (step != Step::Exhausted) return step;

      unused_colors_ = saved_unused;
      --color_uses_[static_cast<size_t>(c)];
      colors_[static_cast<size_t>(e)] = 0;
      set_used(u, c, 0);
      set_used(v, c, 0);
      lo_[static_cast<size_t>(u)] = saved_lo_u;
      hi_[static_cast<size_t>(u)] = saved_hi_u;
      lo_[static_cast<size_t>(v)] = saved_lo_v;
      hi_[static_cast<size_t>(v)] = saved_hi_v;
    }
    return Step::Exhausted;
  }

  const MeshGraph& g_;
  const int t_;
  const SearchBudget& budget_;
  std::vector<EdgeId> order_;
  std::vector<int> colors_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<char> used_;
  std::vector<int> color_uses_;
  int unused_colors_;
  std::int64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

int largest_admissible_palette(const MeshGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::InvalidParameter, "search needs a connected graph");
  int cap = g.edge_count();
  if (is_bipartite(g)) cap = std::min(cap, theorem1_upper(g));
  return cap;
}

}  // namespace

SearchResult find_interval_coloring(std::shared_ptr<const MeshGraph> g, int t,
                                    const SearchBudget& budget) {
  if (!g) throw Error(ErrorCode::InvalidParameter, "search without a graph");
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "t must be at least 1");
  if (!is_connected(*g)) throw Error(ErrorCode::InvalidParameter, "search needs a connected graph");

  SearchResult result;
  if (g->edge_count() > budget.max_edges) {
    result.outcome = SearchOutcome::BudgetExceeded;
    return result;
  }
  // A run of d(v) colors cannot fit in [1, t], and t colors need t edges.
  if (max_degree(*g) > t || t > g->edge_count()) {
    result.outcome = SearchOutcome::Absent;
    return result;
  }

  Backtracker search(*g, t, budget);
  const Step step = search.run();
  result.nodes = search.nodes();
  switch (step) {
    case Step::Found:
      result.outcome = SearchOutcome::Found;
      result.coloring.emplace(std::move(g), search.colors(), t);
      break;
    case Step::Exhausted: result.outcome = SearchOutcome::Absent; break;
    case Step::OutOfBudget: result.outcome = SearchOutcome::BudgetExceeded; break;
  }
  return result;
}

ExactResult exact_w(std::shared_ptr<const MeshGraph> g, const SearchBudget& budget) {
  const int cap = largest_admissible_palette(*g);
  for (int t = std::max(1, max_degree(*g)); t <= cap; ++t) {
    const auto r = find_interval_coloring(g, t, budget);
    if (r.outcome == SearchOutcome::Found) return {SearchOutcome::Found, t};
    if (r.outcome == SearchOutcome::BudgetExceeded) return {SearchOutcome::BudgetExceeded, 0};
  }
  return {SearchOutcome::Absent, 0};
}

ExactResult exact_W(std::shared_ptr<const MeshGraph> g, const SearchBudget& budget) {
  const int floor = std::max(1, max_degree(*g));
  for (int t = largest_admissible_palette(*g); t >= floor; --t) {
    const auto r = find_interval_coloring(g, t, budget);
    if (r.outcome == SearchOutcome::Found) return {SearchOutcome::Found, t};
    if (r.outcome == SearchOutcome::BudgetExceeded) return {SearchOutcome::BudgetExceeded, 0};
  }
  return {SearchOutcome::Absent, 0};
}

}  // namespace ivc
