#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ivc/bounds.hpp"
#include "ivc/constructions.hpp"
#include "ivc/error.hpp"
#include "ivc/ivc.h"
#include "ivc/search.hpp"
#include "ivc/serialize.hpp"

#ifndef IVC_VERSION
#define IVC_VERSION "0.0.0"
#endif

struct ivc_graph {
  std::shared_ptr<const ivc::MeshGraph> graph;
};

struct ivc_coloring {
  ivc::EdgeColoring coloring;
  std::vector<int> rule_trace;
};

struct ivc_coloring_list {
  std::vector<ivc_coloring> items;
};

struct ivc_report {
  ivc::SpectrumReport report;
  std::vector<ivc::GridVertex> violations;
};

namespace {

thread_local std::string last_error;

ivc_status status_of(ivc::ErrorCode code) {
  using ivc::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParameter: return IVC_INVALID_PARAMETER;
    case ErrorCode::InvalidVertex: return IVC_INVALID_VERTEX;
    case ErrorCode::NoFiniteDiameter: return IVC_NO_FINITE_DIAMETER;
    case ErrorCode::NotRegular: return IVC_NOT_REGULAR;
    case ErrorCode::CannotStepDown: return IVC_CANNOT_STEP_DOWN;
    case ErrorCode::InvalidColoring: return IVC_INVALID_COLORING;
    case ErrorCode::HypothesisViolated: return IVC_HYPOTHESIS_VIOLATED;
    case ErrorCode::RangeError: return IVC_RANGE_ERROR;
    case ErrorCode::ParseError: return IVC_PARSE_ERROR;
    case ErrorCode::SchemaError: return IVC_SCHEMA_ERROR;
    case ErrorCode::UsageError: return IVC_USAGE_ERROR;
    case ErrorCode::ConstructionFailed: return IVC_CONSTRUCTION_FAILED;
  }
  return IVC_INTERNAL_ERROR;
}

template <class F>
ivc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return IVC_OK;
  } catch (const ivc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return IVC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return IVC_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw ivc::Error(ivc::ErrorCode::InvalidParameter, std::string(what) + " is null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ivc::Family family_of(ivc_family family) {
  switch (family) {
    case IVC_FAMILY_PATH: return ivc::Family::Path;
    case IVC_FAMILY_CYCLE: return ivc::Family::EvenCycle;
    case IVC_FAMILY_CYLINDER: return ivc::Family::Cylinder;
    case IVC_FAMILY_TORUS: return ivc::Family::Torus;
    case IVC_FAMILY_PRODUCT: return ivc::Family::Product;
  }
  throw ivc::Error(ivc::ErrorCode::InvalidParameter, "unknown family");
}

ivc::SearchBudget budget_of(const ivc_budget* b) {
  if (b == nullptr) return ivc::SearchBudget::from_env();
  ivc::SearchBudget out;
  out.max_edges = b->max_edges;
  out.max_nodes = b->max_nodes;
  out.time_cap = std::chrono::duration<double>(b->time_cap_seconds);
  return out;
}

ivc_search_outcome outcome_of(ivc::SearchOutcome o) {
  switch (o) {
    case ivc::SearchOutcome::Found: return IVC_SEARCH_FOUND;
    case ivc::SearchOutcome::Absent: return IVC_SEARCH_ABSENT;
    case ivc::SearchOutcome::BudgetExceeded: return IVC_SEARCH_BUDGET_EXCEEDED;
  }
  return IVC_SEARCH_BUDGET_EXCEEDED;
}

ivc_status make_graph(ivc_graph** out, const std::function<ivc::MeshGraph()>& build) {
  return guarded([&] {
    require(out, "out");
    *out = new ivc_graph{std::make_shared<const ivc::MeshGraph>(build())};
  });
}

ivc::EdgeId edge_between(const ivc::MeshGraph& g, int l1, int r1, int l2, int r2) {
  g.id({l1, r1});
  g.id({l2, r2});
  auto e = g.find_edge({l1, r1}, {l2, r2});
  if (!e) throw ivc::Error(ivc::ErrorCode::InvalidParameter, "vertices are not adjacent");
  return *e;
}

}  // namespace

extern "C" {

const char* ivc_version(void) { return IVC_VERSION; }

const char* ivc_status_name(ivc_status status) {
  switch (status) {
    case IVC_OK: return "ok";
    case IVC_INVALID_PARAMETER: return "invalid-parameter";
    case IVC_INVALID_VERTEX: return "invalid-vertex";
    case IVC_NO_FINITE_DIAMETER: return "no-finite-diameter";
    case IVC_NOT_REGULAR: return "not-regular";
    case IVC_CANNOT_STEP_DOWN: return "cannot-step-down";
    case IVC_INVALID_COLORING: return "invalid-coloring";
    case IVC_HYPOTHESIS_VIOLATED: return "hypothesis-violated";
    case IVC_RANGE_ERROR: return "range-error";
    case IVC_PARSE_ERROR: return "parse-error";
    case IVC_SCHEMA_ERROR: return "schema-error";
    case IVC_USAGE_ERROR: return "usage-error";
    case IVC_CONSTRUCTION_FAILED: return "construction-failed";
    case IVC_INTERNAL_ERROR: return "internal-error";
  }
  return "internal-error";
}

const char* ivc_last_error(void) { return last_error.c_str(); }

void ivc_string_free(char* s) { std::free(s); }

ivc_status ivc_family_parse(const char* name, ivc_family* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto f = ivc::family_from_string(name);
    if (!f) {
      throw ivc::Error(ivc::ErrorCode::UsageError, std::string("unknown family '") + name + "'");
    }
    switch (*f) {
      case ivc::Family::Path: *out = IVC_FAMILY_PATH; break;
      case ivc::Family::EvenCycle: *out = IVC_FAMILY_CYCLE; break;
      case ivc::Family::Cylinder: *out = IVC_FAMILY_CYLINDER; break;
      case ivc::Family::Torus: *out = IVC_FAMILY_TORUS; break;
      case ivc::Family::Product: *out = IVC_FAMILY_PRODUCT; break;
    }
  });
}

ivc_status ivc_budget_default(ivc_budget* out) {
  return guarded([&] {
    require(out, "out");
    const auto b = ivc::SearchBudget::from_env();
    out->max_edges = b.max_edges;
    out->max_nodes = b.max_nodes;
    out->time_cap_seconds = b.time_cap.count();
  });
}

ivc_status ivc_graph_path(int m, ivc_graph** out) {
  return make_graph(out, [&] { return ivc::build_path(m); });
}

ivc_status ivc_graph_even_cycle(int k, ivc_graph** out) {
  return make_graph(out, [&] { return ivc::build_even_cycle(k); });
}

ivc_status ivc_graph_cylinder(int m, int n, ivc_graph** out) {
  return make_graph(out, [&] { return ivc::build_cylinder(m, n); });
}

ivc_status ivc_graph_torus(int m, int n, ivc_graph** out) {
  return make_graph(out, [&] { return ivc::build_torus(m, n); });
}

ivc_status ivc_graph_build(ivc_family family, int m, int n, ivc_graph** out) {
  return make_graph(out, [&] { return ivc::build_family(family_of(family), m, n); });
}

ivc_status ivc_graph_product(const ivc_graph* a, const ivc_graph* b, ivc_graph** out) {
  return make_graph(out, [&] {
    require(a, "a");
    require(b, "b");
    return ivc::cartesian_product(*a->graph, *b->graph);
  });
}

void ivc_graph_free(ivc_graph* g) { delete g; }

int ivc_graph_vertex_count(const ivc_graph* g) { return g ? g->graph->vertex_count() : 0; }
int ivc_graph_edge_count(const ivc_graph* g) { return g ? g->graph->edge_count() : 0; }
int ivc_graph_max_degree(const ivc_graph* g) { return g ? ivc::max_degree(*g->graph) : 0; }
int ivc_graph_is_bipartite(const ivc_graph* g) { return g && ivc::is_bipartite(*g->graph); }
int ivc_graph_is_regular(const ivc_graph* g) { return g && ivc::is_regular(*g->graph); }

ivc_status ivc_graph_diameter(const ivc_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = ivc::diameter(*g->graph);
  });
}

ivc_status ivc_graph_to_json(const ivc_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(ivc::graph_to_json(*g->graph));
  });
}

ivc_status ivc_coloring_generate(ivc_family family, int m, int n, int t, ivc_coloring** out) {
  return guarded([&] {
    require(out, "out");
    switch (family_of(family)) {
      case ivc::Family::Cylinder: {
        auto r = ivc::cylinder_coloring(m, n);
        if (t != 0 && t != r.claimed_t) {
          throw ivc::Error(ivc::ErrorCode::RangeError,
                           "t=" + std::to_string(t) + " outside the valid interval [" +
                               std::to_string(r.claimed_t) + ", " +
                               std::to_string(r.claimed_t) + "] for cylinders");
        }
        *out = new ivc_coloring{std::move(r.coloring), std::move(r.rule_trace)};
        return;
      }
      case ivc::Family::Torus: {
        auto r = ivc::torus_coloring(m, n);
        if (t == 0 || t == r.claimed_t) {
          *out = new ivc_coloring{std::move(r.coloring), std::move(r.rule_trace)};
        } else {
          *out = new ivc_coloring{ivc::torus_coloring_with_palette(m, n, t), {}};
        }
        return;
      }
      default:
        throw ivc::Error(ivc::ErrorCode::InvalidParameter,
                         "constructions exist for cylinder and torus only");
    }
  });
}

ivc_status ivc_coloring_from_json(const char* text, ivc_coloring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto loaded = ivc::coloring_from_json(text);
    *out = new ivc_coloring{std::move(loaded.coloring), std::move(loaded.rule_trace)};
  });
}

ivc_status ivc_coloring_step_down(const ivc_coloring* c, ivc_coloring** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = new ivc_coloring{ivc::step_down(c->coloring), {}};
  });
}

void ivc_coloring_free(ivc_coloring* c) { delete c; }

int ivc_coloring_palette(const ivc_coloring* c) { return c ? c->coloring.palette_size() : 0; }

ivc_status ivc_coloring_graph(const ivc_coloring* c, ivc_graph** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = new ivc_graph{c->coloring.graph_ptr()};
  });
}

ivc_status ivc_coloring_color(const ivc_coloring* c, int layer1, int ring1, int layer2,
                              int ring2, int* out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = c->coloring.color(edge_between(c->coloring.graph(), layer1, ring1, layer2, ring2));
  });
}

ivc_status ivc_coloring_set_color(ivc_coloring* c, int layer1, int ring1, int layer2, int ring2,
                                  int color) {
  return guarded([&] {
    require(c, "coloring");
    const auto e = edge_between(c->coloring.graph(), layer1, ring1, layer2, ring2);
    c->coloring = c->coloring.with_color(e, color);
  });
}

ivc_status ivc_coloring_to_json(const ivc_coloring* c, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = copy_string(ivc::coloring_to_json(c->coloring, c->rule_trace));
  });
}

ivc_status ivc_coloring_to_dot(const ivc_coloring* c, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = copy_string(ivc::coloring_to_dot(c->coloring));
  });
}

ivc_status ivc_coloring_to_csv(const ivc_coloring* c, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    *out = copy_string(ivc::coloring_to_csv(c->coloring, c->rule_trace));
  });
}

ivc_status ivc_sweep(int m, int n, ivc_coloring_list** out) {
  return guarded([&] {
    require(out, "out");
    auto list = std::make_unique<ivc_coloring_list>();
    for (auto& c : ivc::spectrum_sweep(m, n)) list->items.push_back({std::move(c), {}});
    *out = list.release();
  });
}

size_t ivc_coloring_list_size(const ivc_coloring_list* list) {
  return list ? list->items.size() : 0;
}

const ivc_coloring* ivc_coloring_list_at(const ivc_coloring_list* list, size_t index) {
  if (list == nullptr || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void ivc_coloring_list_free(ivc_coloring_list* list) { delete list; }

ivc_status ivc_verify(const ivc_coloring* c, ivc_report** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "out");
    auto report = ivc::verify_interval(c->coloring);
    auto violations = report.violations();
    *out = new ivc_report{std::move(report), std::move(violations)};
  });
}

int ivc_report_is_proper(const ivc_report* r) { return r && r->report.proper; }
int ivc_report_is_surjective(const ivc_report* r) { return r && r->report.surjective; }
int ivc_report_is_interval(const ivc_report* r) { return r && r->report.interval; }

size_t ivc_report_violation_count(const ivc_report* r) { return r ? r->violations.size() : 0; }

ivc_status ivc_report_violation(const ivc_report* r, size_t index, int* layer, int* ring) {
  return guarded([&] {
    require(r, "report");
    require(layer, "layer");
    require(ring, "ring");
    if (index >= r->violations.size()) {
      throw ivc::Error(ivc::ErrorCode::RangeError, "violation index out of range");
    }
    *layer = r->violations[index].layer;
    *ring = r->violations[index].ring;
  });
}

ivc_status ivc_report_spectrum(const ivc_report* r, int layer, int ring, int* colors,
                               size_t capacity, size_t* size) {
  return guarded([&] {
    require(r, "report");
    require(size, "size");
    const auto& vs = r->report.at({layer, ring});
    *size = vs.colors.size();
    if (capacity > 0) require(colors, "colors");
    for (size_t k = 0; k < vs.colors.size() && k < capacity; ++k) colors[k] = vs.colors[k];
  });
}

ivc_status ivc_report_to_json(const ivc_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(ivc::report_to_json(r->report));
  });
}

ivc_status ivc_report_to_text(const ivc_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(ivc::report_to_text(r->report));
  });
}

void ivc_report_free(ivc_report* r) { delete r; }

ivc_status ivc_theorem1_upper(const ivc_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = ivc::theorem1_upper(*g->graph);
  });
}

ivc_status ivc_lower_bound(ivc_family family, int m, int n, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = ivc::lower_bound(family_of(family), m, n);
  });
}

ivc_status ivc_bounds_csv(ivc_family family, int m_lo, int m_hi, int n_lo, int n_hi,
                          const ivc_budget* oracle, char** out) {
  return guarded([&] {
    require(out, "out");
    std::optional<ivc::SearchBudget> budget;
    if (oracle != nullptr) budget = budget_of(oracle);
    const auto rows =
        ivc::bounds_table(family_of(family), {m_lo, m_hi}, {n_lo, n_hi}, budget);
    *out = copy_string(ivc::to_csv(rows));
  });
}

ivc_status ivc_search(const ivc_graph* g, int t, const ivc_budget* budget,
                      ivc_search_outcome* outcome, ivc_coloring** found) {
  return guarded([&] {
    require(g, "graph");
    require(outcome, "outcome");
    auto r = ivc::find_interval_coloring(g->graph, t, budget_of(budget));
    *outcome = outcome_of(r.outcome);
    if (found != nullptr) {
      *found = r.coloring ? new ivc_coloring{std::move(*r.coloring), {}} : nullptr;
    }
  });
}

ivc_status ivc_exact_w(const ivc_graph* g, const ivc_budget* budget, ivc_search_outcome* outcome,
                       int* value) {
  return guarded([&] {
    require(g, "graph");
    require(outcome, "outcome");
    require(value, "value");
    const auto r = ivc::exact_w(g->graph, budget_of(budget));
    *outcome = outcome_of(r.outcome);
    *value = r.value;
  });
}

ivc_status ivc_exact_W(const ivc_graph* g, const ivc_budget* budget, ivc_search_outcome* outcome,
                       int* value) {
  return guarded([&] {
    require(g, "graph");
    require(outcome, "outcome");
    require(value, "value");
    const auto r = ivc::exact_W(g->graph, budget_of(budget));
    *outcome = outcome_of(r.outcome);
    *value = r.value;
  });
}

}  // extern "C"
