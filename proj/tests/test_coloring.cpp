#include <memory>

#include "doctest.h"
#include "ivc/coloring.hpp"
#include "ivc/constructions.hpp"
#include "ivc/error.hpp"

using namespace ivc;

namespace {

// C_4 colored around the cycle: (1,1)-(1,2), (1,2)-(1,3), (1,3)-(1,4), (1,4)-(1,1).
EdgeColoring c4_coloring(int a, int b, int c, int d, int t) {
  auto g = std::make_shared<const MeshGraph>(build_even_cycle(4));
  std::vector<int> colors(4);
  colors[static_cast<size_t>(*g->find_edge({1, 1}, {1, 2}))] = a;
  colors[static_cast<size_t>(*g->find_edge({1, 2}, {1, 3}))] = b;
  colors[static_cast<size_t>(*g->find_edge({1, 3}, {1, 4}))] = c;
  colors[static_cast<size_t>(*g->find_edge({1, 4}, {1, 1}))] = d;
  return EdgeColoring(g, colors, t);
}

}  // namespace

TEST_CASE("spectrum of constructed colorings at x_1^(1)") {
  CHECK(spectrum(cylinder_coloring(3, 2).coloring, {1, 1}) == std::vector<int>{1, 2, 3});
  CHECK(spectrum(torus_coloring(2, 2).coloring, {1, 1}) == std::vector<int>{1, 2, 3, 4});
  const auto alt = c4_coloring(1, 2, 1, 2, 2);
  for (int j = 1; j <= 4; ++j) CHECK(spectrum(alt, {1, j}) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(spectrum(alt, {2, 1}), Error);
}

TEST_CASE("properness") {
  CHECK(is_proper(cylinder_coloring(3, 2).coloring));
  CHECK(is_proper(torus_coloring(2, 2).coloring));
  CHECK_FALSE(is_proper(c4_coloring(1, 1, 1, 1, 1)));
}

TEST_CASE("surjectivity") {
  CHECK(is_surjective(cylinder_coloring(4, 5).coloring));
  CHECK(is_surjective(torus_coloring(3, 4).coloring));
  CHECK_FALSE(is_surjective(c4_coloring(1, 2, 1, 2, 3)));
  // shifted window {2, 3} declared as a 2-palette
  CHECK_FALSE(is_surjective(c4_coloring(2, 3, 2, 3, 2)));
}

TEST_CASE("verify_interval on C_4") {
  SUBCASE("1,2,3,2 is an interval 3-coloring") {
    const auto report = verify_interval(c4_coloring(1, 2, 3, 2, 3));
    CHECK(report.interval);
    CHECK(report.at({1, 1}).colors == std::vector<int>{1, 2});
    CHECK(report.at({1, 2}).colors == std::vector<int>{1, 2});
    CHECK(report.at({1, 3}).colors == std::vector<int>{2, 3});
    CHECK(report.at({1, 4}).colors == std::vector<int>{2, 3});
  }
  SUBCASE("1,3,1,3 is proper with a gap") {
    const auto report = verify_interval(c4_coloring(1, 3, 1, 3, 3));
    CHECK(report.proper);
    CHECK_FALSE(report.interval);
    CHECK(report.violations().size() == 4);
  }
  SUBCASE("shifted window is rejected until normalized") {
    const auto shifted = c4_coloring(2, 3, 4, 3, 3);
    const auto report = verify_interval(shifted);
    CHECK_FALSE(report.interval);
    CHECK(report.foreign_colors == std::vector<int>{4});
    CHECK(verify_interval(normalize(shifted)).interval);
    CHECK(normalize(shifted).palette_size() == 3);
  }
  SUBCASE("out-of-palette colors name the vertex") {
    const auto report = verify_interval(c4_coloring(0, 1, 2, 1, 2));
    CHECK_FALSE(report.interval);
    CHECK_FALSE(report.at({1, 1}).in_palette);
  }
}

TEST_CASE("verify_interval on the C(2,4) construction") {
  const auto report = verify_interval(cylinder_coloring(2, 2).coloring);
  CHECK(report.proper);
  CHECK(report.surjective);
  CHECK(report.interval);
  CHECK(report.palette_size == 6);
}

TEST_CASE("interval implies run structure and palette >= Delta") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const auto c = cylinder_coloring(m, n).coloring;
      const auto report = verify_interval(c);
      REQUIRE(report.interval);
      CHECK(c.palette_size() >= max_degree(c.graph()));
      for (const auto& vs : report.vertices) {
        CHECK(vs.max - vs.min == vs.degree - 1);
        CHECK(static_cast<int>(vs.colors.size()) == vs.degree);
      }
    }
  }
}

TEST_CASE("reversing colors preserves interval colorings") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      CHECK(verify_interval(reverse_colors(cylinder_coloring(m, n).coloring)).interval);
      CHECK(verify_interval(reverse_colors(torus_coloring(m, n).coloring)).interval);
    }
  }
}

TEST_CASE("coloring totality is enforced") {
  auto g = std::make_shared<const MeshGraph>(build_even_cycle(4));
  CHECK_THROWS_AS(EdgeColoring(g, {1, 2, 1}, 2), Error);
  CHECK_THROWS_AS(EdgeColoring(g, {1, 2, 1, 2}, 0), Error);
  const auto c = c4_coloring(1, 2, 1, 2, 2);
  CHECK(c.color({1, 4}, {1, 1}) == 2);
  CHECK_THROWS_AS(c.color({1, 1}, {1, 3}), Error);
}
