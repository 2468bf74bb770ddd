#pragma once

#include <vector>

#include "ivc/coloring.hpp"

namespace ivc {

struct ConstructionResult {
  EdgeColoring coloring;
  int claimed_t = 0;
  /// Per EdgeId, the number of the rule that colored the edge.
  std::vector<int> rule_trace;
  /// Rule instances that landed on an already colored edge with the same
  /// rule and color (the torus mirror at i = m).
  int mirror_overlaps = 0;
};

/// 3m + n - 2
int cylinder_palette(int m, int n);
/// max{3m + n, 3n + m}
int torus_palette(int m, int n);

/// Interval (3m+n-2)-coloring of C(m, 2n) built from the six ring/rung
/// rules. Throws ConstructionFailed, naming the offending vertex and its
/// spectrum, if the result does not verify.
ConstructionResult cylinder_coloring(int m, int n);

/// Interval max{3m+n, 3n+m}-coloring of T(2m, 2n) built from the eight
/// rules. For m > n the coloring of T(2n, 2m) is pulled back through the
/// factor swap (i, j) -> (j, i).
ConstructionResult torus_coloring(int m, int n);

/// Turns an interval t-coloring of a Delta-regular graph into an interval
/// (t-1)-coloring by recoloring every edge of color t with color t - Delta.
///
/// Both endpoints of a color-t edge see exactly {t-Delta+1, ..., t}, so
/// t - Delta is free there and the endpoint spectra become
/// {t-Delta, ..., t-1}. No other color loses an edge.
///
/// Throws NotRegular, CannotStepDown (t == Delta) or InvalidColoring.
EdgeColoring step_down(const EdgeColoring& c);

/// Verified interval t-colorings of T(2m, 2n) for t = max{3m+n, 3n+m}
/// down to 4, in that order.
std::vector<EdgeColoring> spectrum_sweep(int m, int n);

/// Member of the torus sweep with palette exactly t. Throws RangeError
/// naming [4, max{3m+n, 3n+m}] when t is outside it.
EdgeColoring torus_coloring_with_palette(int m, int n, int t);

}  // namespace ivc
