#include "ivc/bounds.hpp"

#include <memory>
#include <sstream>

#include "ivc/constructions.hpp"
#include "ivc/error.hpp"

namespace ivc {

int theorem1_upper(const MeshGraph& g) {
  if (!is_bipartite(g)) {
    throw Error(ErrorCode::HypothesisViolated, "the diameter bound needs a bipartite graph");
  }
  return diameter(g) * (max_degree(g) - 1) + 1;
}

int lower_bound(Family family, int m, int n) {
  switch (family) {
    case Family::Cylinder: return cylinder_coloring(m, n).claimed_t;
    case Family::Torus: return torus_coloring(m, n).claimed_t;
    default: break;
  }
  throw Error(ErrorCode::InvalidParameter,
              std::string("no constructive lower bound for family ") + to_string(family));
}

IntRange parse_range(const std::string& text) {
  const auto bad = [&] {
    return Error(ErrorCode::UsageError, "bad range '" + text + "', expected A..B");
  };
  IntRange r;
  try {
    size_t pos = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &pos);
      if (pos != text.size()) throw bad();
      return r;
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    r.lo = std::stoi(lo, &pos);
    if (pos != lo.size()) throw bad();
    r.hi = std::stoi(hi, &pos);
    if (pos != hi.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (r.lo > r.hi) throw bad();
  return r;
}

BoundsRow bounds_row(Family family, int m, int n, const std::optional<SearchBudget>& oracle) {
  auto g = std::make_shared<const MeshGraph>(build_family(family, m, n));
  BoundsRow row;
  row.family = family;
  row.m = m;
  row.n = n;
  row.delta = max_degree(*g);
  row.diam = diameter(*g);
  row.w_claimed = row.delta;
  row.lower_W = lower_bound(family, m, n);
  row.upper_W = theorem1_upper(*g);
  if (oracle && g->edge_count() <= oracle->max_edges) {
    if (auto w = exact_w(g, *oracle); w.outcome == SearchOutcome::Found) row.w_exact = w.value;
    if (auto W = exact_W(g, *oracle); W.outcome == SearchOutcome::Found) row.W_exact = W.value;
  }
  return row;
}

std::vector<BoundsRow> bounds_table(Family family, IntRange m_range, IntRange n_range,
                                    const std::optional<SearchBudget>& oracle) {
  if (family != Family::Cylinder && family != Family::Torus) {
    throw Error(ErrorCode::InvalidParameter, "bounds are tabulated for cylinder and torus only");
  }
  if (m_range.lo > m_range.hi || n_range.lo > n_range.hi) {
    throw Error(ErrorCode::InvalidParameter, "empty parameter range");
  }
  std::vector<BoundsRow> rows;
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) rows.push_back(bounds_row(family, m, n, oracle));
  }
  return rows;
}

std::string to_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "family,m,n,delta,diam,w_claimed,lower_W,upper_W,w_exact,W_exact\n";
  for (const auto& r : rows) {
    os << to_string(r.family) << ',' << r.m << ',' << r.n << ',' << r.delta << ',' << r.diam
       << ',' << r.w_claimed << ',' << r.lower_W << ',' << r.upper_W << ',';
    if (r.w_exact) os << *r.w_exact;
    os << ',';
    if (r.W_exact) os << *r.W_exact;
    os << '\n';
  }
  return os.str();
}

}  // namespace ivc
