// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ivc/bounds.hpp"
#include "ivc/constructions.hpp"
#include "ivc/error.hpp"
#include "ivc/search.hpp"
#include "oracles.hpp"

using namespace ivc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 = no limit
  std::function<Verdict()> run;
};

Verdict fail(const std::string& why) { return {false, why}; }

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

oracle::Spectrum as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

Verdict cylinder_reproduction() {
  int count = 0;
  for (int m = 1; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const auto r = cylinder_coloring(m, n);
      if (!verify_interval(r.coloring).interval) return fail("C" + mn(m, 2 * n) + " not interval");
      if (r.coloring.palette_size() != 3 * m + n - 2) return fail("palette mismatch at " + mn(m, n));
      ++count;
    }
  }
  if (count != 132) return fail("expected 132 instances");
  return {true, "132/132 cylinders"};
}

Verdict torus_reproduction() {
  int count = 0;
  int transposed = 0;
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const auto r = torus_coloring(m, n);
      if (!verify_interval(r.coloring).interval) return fail("T" + mn(2 * m, 2 * n) + " not interval");
      if (r.coloring.palette_size() != std::max(3 * m + n, 3 * n + m)) {
        return fail("palette mismatch at " + mn(m, n));
      }
      ++count;
      transposed += m > n;
    }
  }
  if (count != 121) return fail("expected 121 instances");
  return {true, "121/121 tori (" + std::to_string(transposed) + " via transposition)"};
}

Verdict case_fidelity() {
  int vertices = 0;
  for (int m : {1, 2, 3, 5}) {
    for (int n : {2, 3, 5}) {
      const auto c = cylinder_coloring(m, n).coloring;
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= 2 * n; ++j) {
          if (as_set(spectrum(c, {i, j})) != oracle::cylinder_case_spectrum(m, n, i, j)) {
            return fail("cylinder " + mn(m, n) + " vertex " + mn(i, j));
          }
          ++vertices;
        }
        for (int k = 3; k <= n + 1; ++k) {
          if (spectrum(c, {i, k}) != spectrum(c, {i, 2 * n + 3 - k})) {
            return fail("cylinder reflection " + mn(m, n) + " layer " + std::to_string(i));
          }
        }
      }
    }
  }
  for (int m : {2, 3, 5}) {
    for (int n : {2, 3, 5}) {
      const auto c = torus_coloring(m, n).coloring;
      for (int i = 1; i <= 2 * m; ++i) {
        for (int j = 1; j <= 2 * n; ++j) {
          if (as_set(spectrum(c, {i, j})) != oracle::torus_case_spectrum(m, n, i, j)) {
            return fail("torus " + mn(m, n) + " vertex " + mn(i, j));
          }
          ++vertices;
        }
      }
      // Mirror symmetry across layers (rows of the constructed orientation).
      const bool ordered = m <= n;
      const int half = ordered ? m : n;
      for (int k = 1; k <= half; ++k) {
        const int span = ordered ? 2 * n : 2 * m;
        for (int j = 1; j <= span; ++j) {
          const GridVertex a = ordered ? GridVertex{k, j} : GridVertex{j, k};
          const GridVertex b =
              ordered ? GridVertex{2 * m + 1 - k, j} : GridVertex{j, 2 * n + 1 - k};
          if (spectrum(c, a) != spectrum(c, b)) return fail("torus mirror " + mn(m, n));
        }
      }
    }
  }
  return {true, std::to_string(vertices) + " vertex spectra match their closed form"};
}

Verdict surjectivity_argument() {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const auto c = cylinder_coloring(m, n).coloring;
      std::set<int> all;
      for (int i = 1; i <= m; ++i) {
        std::set<int> f;
        for (int j = 1; j <= n + 1; ++j) f.insert(c.color({i, j}, {i, j + 1}));
        if (f != oracle::run(3 * i - 2, 3 * i + n - 2)) return fail("F_i at " + mn(m, n));
        all.insert(f.begin(), f.end());
      }
      if (all != oracle::run(1, 3 * m + n - 2)) return fail("union at " + mn(m, n));
    }
  }
  return {true, "union of F_i = {1..3m+n-2} on 132 instances"};
}

Verdict palette_sweep() {
  std::ostringstream detail;
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto sweep = spectrum_sweep(m, n);
    int expected = std::max(3 * m + n, 3 * n + m);
    for (const auto& c : sweep) {
      if (c.palette_size() != expected) return fail("gap at t=" + std::to_string(expected));
      if (!verify_interval(c).interval) return fail("t=" + std::to_string(expected) + " fails");
      --expected;
    }
    if (expected != 3) return fail("sweep of " + mn(m, n) + " stops early");
    detail << "T" << mn(2 * m, 2 * n) << ":" << sweep.front().palette_size() << "..4 ";
  }
  return {true, detail.str()};
}

Verdict bound_consistency() {
  int rows = 0;
  for (int m = 1; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const auto row = bounds_row(Family::Cylinder, m, n, std::nullopt);
      if (row.lower_W > row.upper_W) return fail("cylinder " + mn(m, n));
      if (m >= 3 && row.upper_W != 3 * m + 3 * n - 2) return fail("upper bound at " + mn(m, n));
      ++rows;
    }
  }
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const auto row = bounds_row(Family::Torus, m, n, std::nullopt);
      if (row.lower_W > row.upper_W) return fail("torus " + mn(m, n));
      ++rows;
    }
  }
  return {true, std::to_string(rows) + " rows with lower <= upper"};
}

Verdict oracle_cross_validation() {
  const SearchBudget budget;  // 16 edges
  const auto c4 = std::make_shared<const MeshGraph>(build_even_cycle(4));
  const auto c6 = std::make_shared<const MeshGraph>(build_even_cycle(6));
  const auto cyl = std::make_shared<const MeshGraph>(build_cylinder(2, 2));

  const auto W4 = exact_W(c4, budget);
  const auto W6 = exact_W(c6, budget);
  const auto w4 = exact_w(c4, budget);
  const auto wc = exact_w(cyl, budget);
  for (const auto* r : {&W4, &W6, &w4, &wc}) {
    if (r->outcome != SearchOutcome::Found) return fail("search did not settle");
  }
  if (W4.value != 3) return fail("W(C_4) = " + std::to_string(W4.value));
  if (W6.value != 4) return fail("W(C_6) = " + std::to_string(W6.value));
  if (w4.value != 2) return fail("w(C_4) = " + std::to_string(w4.value));
  if (wc.value != 3) return fail("w(C(2,4)) = " + std::to_string(wc.value));

  // C_4 = C(1,4) and C_6 = C(1,6).
  if (W4.value < lower_bound(Family::Cylinder, 1, 2) || W4.value > theorem1_upper(*c4)) {
    return fail("W(C_4) outside its bounds");
  }
  if (W6.value < lower_bound(Family::Cylinder, 1, 3) || W6.value > theorem1_upper(*c6)) {
    return fail("W(C_6) outside its bounds");
  }
  if (w4.value != max_degree(*c4) || wc.value != max_degree(*cyl)) return fail("w != Delta");
  return {true, "W(C_4)=3 W(C_6)=4 w(C_4)=2 w(C(2,4))=3"};
}

Verdict fault_injection() {
  int mutations = 0;
  int caught = 0;
  for (const auto& base : {cylinder_coloring(2, 2).coloring, torus_coloring(2, 2).coloring}) {
    for (EdgeId e = 0; e < base.graph().edge_count(); ++e) {
      for (int delta : {-1, +1}) {
        const auto mutated = base.with_color(e, base.color(e) + delta);
        const auto report = verify_interval(mutated);
        ++mutations;
        if (report.proper && report.interval) continue;
        if (report.violations().empty()) return fail("failure without a named vertex");
        ++caught;
      }
    }
  }
  const double rate = static_cast<double>(caught) / mutations;
  std::ostringstream detail;
  detail << caught << "/" << mutations << " mutations rejected";
  if (rate < 0.99) return fail(detail.str());
  return {true, detail.str()};
}

Verdict step_down_soundness() {
  std::mt19937 rng(0x1c0105);
  int verified = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    // Regular members of the grid: every torus, and cylinders with m <= 2.
    const bool torus = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    const int m = torus ? std::uniform_int_distribution<int>(2, 12)(rng)
                        : std::uniform_int_distribution<int>(1, 2)(rng);
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    auto c = torus ? torus_coloring(m, n).coloring : cylinder_coloring(m, n).coloring;
    const int delta = max_degree(c.graph());
    const int steps = std::uniform_int_distribution<int>(0, c.palette_size() - delta)(rng);
    for (int s = 0; s < steps; ++s) {
      c = step_down(c);
      if (!verify_interval(c).interval) {
        return fail("iteration " + std::to_string(iter) + " step " + std::to_string(s));
      }
      ++verified;
    }
  }
  return {true, "1000 iterations, " + std::to_string(verified) + " intermediate colorings"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cylinder construction", 5.0, cylinder_reproduction},
      {2, "torus construction", 10.0, torus_reproduction},
      {3, "closed-form spectra", 0.0, case_fidelity},
      {4, "ring color coverage", 0.0, surjectivity_argument},
      {5, "full palette sweep", 5.0, palette_sweep},
      {6, "bound consistency", 0.0, bound_consistency},
      {7, "oracle cross-validation", 60.0, oracle_cross_validation},
      {8, "fault injection", 0.0, fault_injection},
      {9, "step-down soundness", 30.0, step_down_soundness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
      v = fail(v.detail + "; over the " + std::to_string(c.time_limit_seconds) + " s limit");
    }
    failures += !v.pass;
    std::printf("[%s] AC%d %-26s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
