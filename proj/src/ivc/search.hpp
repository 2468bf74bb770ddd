#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ivc/coloring.hpp"

namespace ivc {

/// Limits for one exhaustive search. Instances with more than `max_edges`
/// edges are refused outright; `max_nodes` and `time_cap` cut a running
/// search short. Either way the outcome is BudgetExceeded, never Absent.
struct SearchBudget {
  int max_edges = 16;
  std::int64_t max_nodes = 200'000'000;
  std::chrono::duration<double> time_cap{60.0};

  /// Defaults, with `max_edges` overridden by IVC_SEARCH_MAX_EDGES when set.
  static SearchBudget from_env();
};

enum class SearchOutcome { Found, Absent, BudgetExceeded };

const char* to_string(SearchOutcome outcome) noexcept;

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Absent;
  std::optional<EdgeColoring> coloring;
  std::int64_t nodes = 0;
};

/// Edges in the order BFS from vertex 0 first reaches them.
std::vector<EdgeId> bfs_edge_order(const MeshGraph& g);

/// Decides whether `g` has an interval t-coloring. Colors are tried in
/// ascending order along bfs_edge_order, so the result is deterministic.
/// Throws InvalidParameter for a disconnected graph or t < 1.
SearchResult find_interval_coloring(std::shared_ptr<const MeshGraph> g, int t,
                                    const SearchBudget& budget);

struct ExactResult {
  SearchOutcome outcome = SearchOutcome::Absent;
  int value = 0;  // meaningful only for Found
};

/// Least t with an interval t-coloring, scanning upward from Delta.
/// The budget applies to each per-t search.
ExactResult exact_w(std::shared_ptr<const MeshGraph> g, const SearchBudget& budget);
/// Greatest such t, scanning downward from the largest admissible palette
/// (the diameter bound for bipartite graphs, never above |E|).
ExactResult exact_W(std::shared_ptr<const MeshGraph> g, const SearchBudget& budget);

}  // namespace ivc
