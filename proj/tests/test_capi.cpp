// Exercises libivc through its C interface only.
#include <cstring>
#include <string>

#include "doctest.h"
#include "ivc/ivc.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  ivc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  ivc_graph* g = nullptr;
  REQUIRE(ivc_graph_cylinder(3, 2, &g) == IVC_OK);
  CHECK(ivc_graph_vertex_count(g) == 12);
  CHECK(ivc_graph_edge_count(g) == 20);
  CHECK(ivc_graph_max_degree(g) == 4);
  CHECK(ivc_graph_is_bipartite(g));
  CHECK_FALSE(ivc_graph_is_regular(g));
  int d = 0;
  CHECK(ivc_graph_diameter(g, &d) == IVC_OK);
  CHECK(d == 4);
  int upper = 0;
  CHECK(ivc_theorem1_upper(g, &upper) == IVC_OK);
  CHECK(upper == 13);
  char* json = nullptr;
  REQUIRE(ivc_graph_to_json(g, &json) == IVC_OK);
  CHECK(take(json).find("\"family\":\"cylinder\"") != std::string::npos);
  ivc_graph_free(g);

  ivc_graph* path = nullptr;
  ivc_graph* cycle = nullptr;
  ivc_graph* product = nullptr;
  REQUIRE(ivc_graph_path(2, &path) == IVC_OK);
  REQUIRE(ivc_graph_even_cycle(4, &cycle) == IVC_OK);
  REQUIRE(ivc_graph_product(path, cycle, &product) == IVC_OK);
  CHECK(ivc_graph_edge_count(product) == 12);
  ivc_graph_free(product);
  ivc_graph_free(cycle);
  ivc_graph_free(path);
}

TEST_CASE("errors carry a status and a message") {
  ivc_graph* g = nullptr;
  CHECK(ivc_graph_even_cycle(5, &g) == IVC_INVALID_PARAMETER);
  CHECK(g == nullptr);
  CHECK(std::strlen(ivc_last_error()) > 0);
  CHECK(std::string(ivc_status_name(IVC_INVALID_PARAMETER)) == "invalid-parameter");
  CHECK(ivc_graph_torus(2, 2, nullptr) == IVC_INVALID_PARAMETER);

  ivc_coloring* c = nullptr;
  CHECK(ivc_coloring_generate(IVC_FAMILY_TORUS, 2, 2, 3, &c) == IVC_RANGE_ERROR);
  CHECK(std::string(ivc_last_error()).find("[4, 8]") != std::string::npos);
  CHECK(ivc_coloring_generate(IVC_FAMILY_CYLINDER, 2, 2, 5, &c) == IVC_RANGE_ERROR);
  CHECK(ivc_coloring_from_json("{", &c) == IVC_PARSE_ERROR);
  CHECK(ivc_coloring_from_json("{}", &c) == IVC_SCHEMA_ERROR);

  ivc_family family;
  CHECK(ivc_family_parse("torus", &family) == IVC_OK);
  CHECK(family == IVC_FAMILY_TORUS);
  CHECK(ivc_family_parse("klein", &family) == IVC_USAGE_ERROR);
}

TEST_CASE("generate, mutate, verify") {
  ivc_coloring* c = nullptr;
  REQUIRE(ivc_coloring_generate(IVC_FAMILY_CYLINDER, 2, 2, 0, &c) == IVC_OK);
  CHECK(ivc_coloring_palette(c) == 6);

  ivc_report* r = nullptr;
  REQUIRE(ivc_verify(c, &r) == IVC_OK);
  CHECK(ivc_report_is_interval(r));
  CHECK(ivc_report_violation_count(r) == 0);
  int colors[4] = {0};
  size_t size = 0;
  REQUIRE(ivc_report_spectrum(r, 1, 1, colors, 4, &size) == IVC_OK);
  CHECK(size == 3);
  CHECK(colors[0] == 1);
  CHECK(colors[2] == 3);
  ivc_report_free(r);

  int color = 0;
  REQUIRE(ivc_coloring_color(c, 1, 1, 1, 2, &color) == IVC_OK);
  CHECK(color == 1);
  CHECK(ivc_coloring_color(c, 1, 1, 1, 3, &color) == IVC_INVALID_PARAMETER);
  REQUIRE(ivc_coloring_set_color(c, 1, 1, 1, 2, 2) == IVC_OK);
  REQUIRE(ivc_verify(c, &r) == IVC_OK);
  CHECK_FALSE(ivc_report_is_interval(r));
  REQUIRE(ivc_report_violation_count(r) > 0);
  int layer = 0;
  int ring = 0;
  CHECK(ivc_report_violation(r, 0, &layer, &ring) == IVC_OK);
  CHECK(layer >= 1);
  char* text = nullptr;
  REQUIRE(ivc_report_to_text(r, &text) == IVC_OK);
  CHECK(take(text).find("interval      no") != std::string::npos);
  ivc_report_free(r);
  ivc_coloring_free(c);
}

TEST_CASE("json round trip through handles") {
  ivc_coloring* c = nullptr;
  REQUIRE(ivc_coloring_generate(IVC_FAMILY_TORUS, 3, 2, 0, &c) == IVC_OK);
  char* json = nullptr;
  REQUIRE(ivc_coloring_to_json(c, &json) == IVC_OK);
  const std::string text = take(json);
  ivc_coloring* back = nullptr;
  REQUIRE(ivc_coloring_from_json(text.c_str(), &back) == IVC_OK);
  REQUIRE(ivc_coloring_to_json(back, &json) == IVC_OK);
  CHECK(take(json) == text);

  char* dot = nullptr;
  REQUIRE(ivc_coloring_to_dot(back, &dot) == IVC_OK);
  CHECK(take(dot).rfind("graph torus {", 0) == 0);
  char* csv = nullptr;
  REQUIRE(ivc_coloring_to_csv(back, &csv) == IVC_OK);
  CHECK(take(csv).find(",rule,") != std::string::npos);
  ivc_coloring_free(back);
  ivc_coloring_free(c);
}

TEST_CASE("sweep and step-down") {
  ivc_coloring_list* list = nullptr;
  REQUIRE(ivc_sweep(2, 3, &list) == IVC_OK);
  REQUIRE(ivc_coloring_list_size(list) == 8);
  for (size_t k = 0; k < 8; ++k) {
    const ivc_coloring* c = ivc_coloring_list_at(list, k);
    CHECK(ivc_coloring_palette(c) == 11 - static_cast<int>(k));
    ivc_report* r = nullptr;
    REQUIRE(ivc_verify(c, &r) == IVC_OK);
    CHECK(ivc_report_is_interval(r));
    ivc_report_free(r);
  }
  CHECK(ivc_coloring_list_at(list, 8) == nullptr);
  ivc_coloring* down = nullptr;
  CHECK(ivc_coloring_step_down(ivc_coloring_list_at(list, 7), &down) == IVC_CANNOT_STEP_DOWN);
  ivc_coloring_list_free(list);

  ivc_coloring* cyl = nullptr;
  REQUIRE(ivc_coloring_generate(IVC_FAMILY_CYLINDER, 3, 2, 0, &cyl) == IVC_OK);
  CHECK(ivc_coloring_step_down(cyl, &down) == IVC_NOT_REGULAR);
  ivc_coloring_free(cyl);
}

TEST_CASE("search through the C interface") {
  ivc_graph* c4 = nullptr;
  REQUIRE(ivc_graph_even_cycle(4, &c4) == IVC_OK);
  ivc_budget budget;
  REQUIRE(ivc_budget_default(&budget) == IVC_OK);

  ivc_search_outcome outcome;
  ivc_coloring* found = nullptr;
  REQUIRE(ivc_search(c4, 3, &budget, &outcome, &found) == IVC_OK);
  CHECK(outcome == IVC_SEARCH_FOUND);
  REQUIRE(found != nullptr);
  CHECK(ivc_coloring_palette(found) == 3);
  ivc_coloring_free(found);

  REQUIRE(ivc_search(c4, 4, &budget, &outcome, &found) == IVC_OK);
  CHECK(outcome == IVC_SEARCH_ABSENT);
  CHECK(found == nullptr);

  int value = 0;
  REQUIRE(ivc_exact_W(c4, &budget, &outcome, &value) == IVC_OK);
  CHECK(value == 3);
  REQUIRE(ivc_exact_w(c4, nullptr, &outcome, &value) == IVC_OK);
  CHECK(value == 2);
  ivc_graph_free(c4);

  ivc_graph* torus = nullptr;
  REQUIRE(ivc_graph_torus(2, 2, &torus) == IVC_OK);
  REQUIRE(ivc_search(torus, 8, &budget, &outcome, nullptr) == IVC_OK);
  CHECK(outcome == IVC_SEARCH_BUDGET_EXCEEDED);
  ivc_graph_free(torus);
}

TEST_CASE("bounds through the C interface") {
  int lower = 0;
  REQUIRE(ivc_lower_bound(IVC_FAMILY_TORUS, 2, 3, &lower) == IVC_OK);
  CHECK(lower == 11);
  char* csv = nullptr;
  ivc_budget budget;
  REQUIRE(ivc_budget_default(&budget) == IVC_OK);
  REQUIRE(ivc_bounds_csv(IVC_FAMILY_CYLINDER, 1, 2, 2, 2, &budget, &csv) == IVC_OK);
  CHECK(take(csv) ==
        "family,m,n,delta,diam,w_claimed,lower_W,upper_W,w_exact,W_exact\n"
        "cylinder,1,2,2,2,2,3,3,2,3\n"
        "cylinder,2,2,3,3,3,6,7,3,6\n");
  CHECK(ivc_bounds_csv(IVC_FAMILY_CYLINDER, 3, 1, 2, 2, nullptr, &csv) == IVC_INVALID_PARAMETER);
}
