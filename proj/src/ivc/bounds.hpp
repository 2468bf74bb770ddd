#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivc/graph.hpp"
#include "ivc/search.hpp"

namespace ivc {

/// d(G) * (Delta(G) - 1) + 1, the palette cap for interval colorings of a
/// bipartite graph. Throws HypothesisViolated for non-bipartite input.
int theorem1_upper(const MeshGraph& g);

/// Constructive lower bound on W: 3m+n-2 for cylinders, max{3m+n, 3n+m}
/// for tori. The value is returned only after the witnessing coloring has
/// been built and verified.
int lower_bound(Family family, int m, int n);

struct BoundsRow {
  Family family = Family::Cylinder;
  int m = 0;
  int n = 0;
  int delta = 0;
  int diam = 0;
  int w_claimed = 0;  // Delta(G)
  int lower_W = 0;
  int upper_W = 0;
  std::optional<int> w_exact;
  std::optional<int> W_exact;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Parses "A..B" or a single integer "A".
IntRange parse_range(const std::string& text);

/// With `oracle`, the exact columns are filled for instances the budget
/// admits and the search settles.
BoundsRow bounds_row(Family family, int m, int n, const std::optional<SearchBudget>& oracle);

/// Rows in (m, n) lexicographic order. Only Cylinder and Torus are accepted.
std::vector<BoundsRow> bounds_table(Family family, IntRange m_range, IntRange n_range,
                                    const std::optional<SearchBudget>& oracle);

/// Header: family,m,n,delta,diam,w_claimed,lower_W,upper_W,w_exact,W_exact
std::string to_csv(const std::vector<BoundsRow>& rows);

}  // namespace ivc
