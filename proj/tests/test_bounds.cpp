#include "doctest.h"
#include "ivc/bounds.hpp"
#include "ivc/error.hpp"

using namespace ivc;

TEST_CASE("diameter bound on small graphs") {
  CHECK(theorem1_upper(build_even_cycle(4)) == 3);
  CHECK(theorem1_upper(build_torus(2, 2)) == 13);
  for (int m = 3; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) CHECK(theorem1_upper(build_cylinder(m, n)) == 3 * m + 3 * n - 2);
  }
  const auto triangle = MeshGraph::from_edges(
      Family::Product, 0, 0, 1, 3,
      {Edge::make({1, 1}, {1, 2}), Edge::make({1, 2}, {1, 3}), Edge::make({1, 1}, {1, 3})});
  try {
    theorem1_upper(triangle);
    FAIL("expected hypothesis-violated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolated);
  }
}

TEST_CASE("constructive lower bounds") {
  CHECK(lower_bound(Family::Cylinder, 3, 2) == 9);
  CHECK(lower_bound(Family::Torus, 2, 3) == 11);
  CHECK(lower_bound(Family::Cylinder, 1, 2) == 3);
  CHECK_THROWS_AS(lower_bound(Family::Path, 3, 0), Error);
  CHECK_THROWS_AS(lower_bound(Family::Torus, 1, 3), Error);
}

TEST_CASE("cylinder lower bound increases in both parameters") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      CHECK(lower_bound(Family::Cylinder, m + 1, n) > lower_bound(Family::Cylinder, m, n));
      CHECK(lower_bound(Family::Cylinder, m, n + 1) > lower_bound(Family::Cylinder, m, n));
    }
  }
}

TEST_CASE("bounds table rows") {
  const auto rows = bounds_table(Family::Cylinder, {1, 3}, {2, 3}, std::nullopt);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.lower_W <= r.upper_W);
    CHECK_FALSE(r.W_exact.has_value());
  }
  const auto& c22 = rows[2];
  CHECK(c22.m == 2);
  CHECK(c22.n == 2);
  CHECK(c22.delta == 3);
  CHECK(c22.w_claimed == 3);
  CHECK(c22.lower_W == 6);
  CHECK(c22.upper_W == 7);

  const auto torus = bounds_table(Family::Torus, {2, 2}, {2, 2}, std::nullopt);
  CHECK(torus.front().lower_W == 8);
  CHECK(torus.front().upper_W == 13);
  CHECK_THROWS_AS(bounds_table(Family::Path, {1, 2}, {2, 2}, std::nullopt), Error);
}

TEST_CASE("oracle columns agree with the bounds") {
  const auto rows = bounds_table(Family::Cylinder, {1, 2}, {2, 4}, SearchBudget{});
  int with_oracle = 0;
  for (const auto& r : rows) {
    if (!r.W_exact) continue;
    ++with_oracle;
    REQUIRE(r.w_exact.has_value());
    CHECK(*r.w_exact == r.w_claimed);
    CHECK(r.lower_W <= *r.W_exact);
    CHECK(*r.W_exact <= r.upper_W);
  }
  // C_4, C_6, C_8 and C(2,4) fit the default 16-edge budget.
  CHECK(with_oracle == 4);
}

TEST_CASE("csv layout") {
  const auto csv = to_csv(bounds_table(Family::Torus, {2, 2}, {2, 3}, std::nullopt));
  CHECK(csv ==
        "family,m,n,delta,diam,w_claimed,lower_W,upper_W,w_exact,W_exact\n"
        "torus,2,2,4,4,4,8,13,,\n"
        "torus,2,3,4,5,4,11,16,,\n");
}

TEST_CASE("range parsing") {
  CHECK(parse_range("1..3").lo == 1);
  CHECK(parse_range("1..3").hi == 3);
  CHECK(parse_range("4").hi == 4);
  CHECK_THROWS_AS(parse_range("3..1"), Error);
  CHECK_THROWS_AS(parse_range("a..b"), Error);
  CHECK_THROWS_AS(parse_range("1..2x"), Error);
}
