// ivc: command-line front end over the C interface of libivc.
//
// Exit codes: 0 valid/found, 1 invalid/absent, 2 usage or input error,
// 3 search budget exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivc/ivc.h"
#include "json.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Failure {
  int exit_code;
  std::string message;
};

void check(ivc_status status) {
  if (status != IVC_OK) {
    throw Failure{kExitUsage, std::string(ivc_status_name(status)) + ": " + ivc_last_error()};
  }
}

struct GraphDeleter {
  void operator()(ivc_graph* g) const { ivc_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(ivc_coloring* c) const { ivc_coloring_free(c); }
};
struct ReportDeleter {
  void operator()(ivc_report* r) const { ivc_report_free(r); }
};
struct ListDeleter {
  void operator()(ivc_coloring_list* l) const { ivc_coloring_list_free(l); }
};
using GraphPtr = std::unique_ptr<ivc_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<ivc_coloring, ColoringDeleter>;
using ReportPtr = std::unique_ptr<ivc_report, ReportDeleter>;
using ListPtr = std::unique_ptr<ivc_coloring_list, ListDeleter>;

std::string take(char* s) {
  std::string out(s);
  ivc_string_free(s);
  return out;
}

ivc_family parse_family(const std::string& name) {
  ivc_family family;
  const ivc_status status = ivc_family_parse(name.c_str(), &family);
  if (status != IVC_OK) throw Failure{kExitUsage, ivc_last_error()};
  return family;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    size_t pos = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &pos);
      if (pos == text.size()) return {v, v};
    } else {
      const std::string lo_text = text.substr(0, dots);
      const std::string hi_text = text.substr(dots + 2);
      const int lo = std::stoi(lo_text, &pos);
      if (pos == lo_text.size()) {
        const int hi = std::stoi(hi_text, &pos);
        if (pos == hi_text.size() && lo <= hi) return {lo, hi};
      }
    }
  } catch (const std::logic_error&) {
  }
  throw Failure{kExitUsage, "bad range '" + text + "', expected A..B"};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ColoringPtr load_coloring(const std::string& path) {
  const std::string text = read_input(path);
  ivc_coloring* c = nullptr;
  check(ivc_coloring_from_json(text.c_str(), &c));
  return ColoringPtr(c);
}

// Primary output plus the outcome of one subcommand.
struct Outcome {
  std::string output;
  int exit_code = kExitValid;
  std::string summary;
};

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  int t = 0;
  std::string input;
  std::string format;
  std::string m_range;
  std::string n_range;
  int oracle_budget = -1;
  bool exact_w = false;
  bool exact_W = false;
  int max_edges = -1;
  long long max_nodes = -1;
  double timeout = -1;
};

Outcome run_generate(const Options& o) {
  ivc_coloring* raw = nullptr;
  check(ivc_coloring_generate(parse_family(o.family), o.m, o.n, o.t, &raw));
  ColoringPtr c(raw);
  char* json = nullptr;
  check(ivc_coloring_to_json(c.get(), &json));
  return {take(json), kExitValid, "t=" + std::to_string(ivc_coloring_palette(c.get()))};
}

Outcome run_verify(const Options& o) {
  ColoringPtr c = load_coloring(o.input);
  ivc_report* raw = nullptr;
  check(ivc_verify(c.get(), &raw));
  ReportPtr r(raw);
  char* text = nullptr;
  check(o.format == "json" ? ivc_report_to_json(r.get(), &text)
                           : ivc_report_to_text(r.get(), &text));
  const bool ok = ivc_report_is_interval(r.get());
  std::ostringstream summary;
  summary << "interval=" << (ok ? "true" : "false")
          << " proper=" << (ivc_report_is_proper(r.get()) ? "true" : "false")
          << " violations=" << ivc_report_violation_count(r.get());
  return {take(text), ok ? kExitValid : kExitInvalid, summary.str()};
}

Outcome run_bounds(const Options& o) {
  const auto [m_lo, m_hi] = parse_range(o.m_range);
  const auto [n_lo, n_hi] = parse_range(o.n_range);
  ivc_budget budget;
  check(ivc_budget_default(&budget));
  const bool use_oracle = o.oracle_budget != 0;
  if (o.oracle_budget > 0) budget.max_edges = o.oracle_budget;
  char* csv = nullptr;
  check(ivc_bounds_csv(parse_family(o.family), m_lo, m_hi, n_lo, n_hi,
                       use_oracle ? &budget : nullptr, &csv));
  const int rows = (m_hi - m_lo + 1) * (n_hi - n_lo + 1);
  return {take(csv), kExitValid, "rows=" + std::to_string(rows)};
}

int exit_for(ivc_search_outcome outcome) {
  switch (outcome) {
    case IVC_SEARCH_FOUND: return kExitValid;
    case IVC_SEARCH_ABSENT: return kExitInvalid;
    case IVC_SEARCH_BUDGET_EXCEEDED: return kExitBudget;
  }
  return kExitBudget;
}

const char* outcome_name(ivc_search_outcome outcome) {
  switch (outcome) {
    case IVC_SEARCH_FOUND: return "found";
    case IVC_SEARCH_ABSENT: return "absent";
    case IVC_SEARCH_BUDGET_EXCEEDED: return "budget-exceeded";
  }
  return "budget-exceeded";
}

Outcome run_search(const Options& o) {
  const int modes = (o.t > 0 ? 1 : 0) + (o.exact_w ? 1 : 0) + (o.exact_W ? 1 : 0);
  if (modes != 1) throw Failure{kExitUsage, "give exactly one of --t, --exact-w, --exact-W"};

  ivc_graph* raw_graph = nullptr;
  check(ivc_graph_build(parse_family(o.family), o.m, o.n, &raw_graph));
  GraphPtr g(raw_graph);
  ivc_budget budget;
  check(ivc_budget_default(&budget));
  if (o.max_edges >= 0) budget.max_edges = o.max_edges;
  if (o.max_nodes >= 0) budget.max_nodes = o.max_nodes;
  if (o.timeout >= 0) budget.time_cap_seconds = o.timeout;

  ivc_search_outcome outcome;
  Outcome out;
  if (o.t > 0) {
    ivc_coloring* found = nullptr;
    check(ivc_search(g.get(), o.t, &budget, &outcome, &found));
    ColoringPtr c(found);
    if (c) {
      char* json = nullptr;
      check(ivc_coloring_to_json(c.get(), &json));
      out.output = take(json);
    }
    out.summary = std::string(outcome_name(outcome)) + " t=" + std::to_string(o.t);
  } else {
    int value = 0;
    check(o.exact_w ? ivc_exact_w(g.get(), &budget, &outcome, &value)
                    : ivc_exact_W(g.get(), &budget, &outcome, &value));
    const char* name = o.exact_w ? "w" : "W";
    if (outcome == IVC_SEARCH_FOUND) out.output = std::to_string(value) + "\n";
    out.summary = std::string(outcome_name(outcome)) + " " + name +
                  (outcome == IVC_SEARCH_FOUND ? "=" + std::to_string(value) : "");
  }
  out.exit_code = exit_for(outcome);
  if (outcome != IVC_SEARCH_FOUND) std::cerr << outcome_name(outcome) << "\n";
  return out;
}

Outcome run_sweep(const Options& o) {
  ivc_coloring_list* raw = nullptr;
  check(ivc_sweep(o.m, o.n, &raw));
  ListPtr list(raw);
  std::ostringstream os;
  bool all_ok = true;
  for (size_t k = 0; k < ivc_coloring_list_size(list.get()); ++k) {
    const ivc_coloring* c = ivc_coloring_list_at(list.get(), k);
    ivc_report* raw_report = nullptr;
    check(ivc_verify(c, &raw_report));
    ReportPtr r(raw_report);
    const bool ok = ivc_report_is_interval(r.get());
    all_ok = all_ok && ok;
    if (o.format == "json") {
      char* json = nullptr;
      check(ivc_coloring_to_json(c, &json));
      os << take(json);
    } else {
      os << "t=" << ivc_coloring_palette(c) << " interval=" << (ok ? "yes" : "no") << "\n";
    }
  }
  return {os.str(), all_ok ? kExitValid : kExitInvalid,
          "colorings=" + std::to_string(ivc_coloring_list_size(list.get()))};
}

Outcome run_export(const Options& o) {
  ColoringPtr c = load_coloring(o.input);
  char* text = nullptr;
  if (o.format == "dot") {
    check(ivc_coloring_to_dot(c.get(), &text));
  } else if (o.format == "csv") {
    check(ivc_coloring_to_csv(c.get(), &text));
  } else {
    throw Failure{kExitUsage, "usage-error: unknown export format '" + o.format + "'"};
  }
  return {take(text), kExitValid, "format=" + o.format};
}

int run(const std::vector<std::string>& args);

int run_replay(const std::string& manifest_path) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_input(manifest_path));
    return run(manifest.at("arguments").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw Failure{kExitUsage, std::string("bad manifest: ") + e.what()};
  }
}

void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::vector<std::string>& args, const Options& o,
                    const std::string& output_path, double seconds, const Outcome& outcome) {
  nlohmann::json manifest;
  manifest["subcommand"] = subcommand;
  manifest["arguments"] = args;
  manifest["version"] = ivc_version();
  manifest["input"] = o.input;
  manifest["output"] = output_path.empty() ? "-" : output_path;
  manifest["wall_time_seconds"] = seconds;
  manifest["exit_code"] = outcome.exit_code;
  manifest["result"] = outcome.summary;
  std::ofstream out(path);
  if (!out) throw Failure{kExitUsage, "cannot write manifest " + path};
  out << manifest.dump(2) << "\n";
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Interval edge colorings of bipartite cylinders and tori"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ivc_version()));

  Options o;
  std::string output_path;
  std::string manifest_path;
  std::string replay_path;
  app.add_option("-o,--output", output_path, "Write primary output to this file");
  app.add_option("--manifest", manifest_path, "Write a run manifest (JSON) to this file");

  auto* generate = app.add_subcommand("generate", "Emit a constructed interval coloring as JSON");
  generate->add_option("--family", o.family, "cylinder or torus")->required();
  generate->add_option("-m", o.m, "First parameter")->required();
  generate->add_option("-n", o.n, "Second parameter")->required();
  generate->add_option("--t", o.t, "Palette size (torus: any value from 4 to the maximum)");

  auto* verify = app.add_subcommand("verify", "Check a coloring JSON file");
  verify->add_option("path", o.input, "Coloring JSON, or - for stdin")->required();
  verify->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* bounds = app.add_subcommand("bounds", "Tabulate bounds on W as CSV");
  bounds->add_option("--family", o.family, "cylinder or torus")->required();
  bounds->add_option("--m-range", o.m_range, "A..B")->required();
  bounds->add_option("--n-range", o.n_range, "C..D")->required();
  bounds->add_option("--oracle-budget", o.oracle_budget,
                     "Largest edge count for exact columns; 0 disables the search");

  auto* search = app.add_subcommand("search", "Exhaustive search for interval colorings");
  search->add_option("--family", o.family, "path, cycle, cylinder or torus")->required();
  search->add_option("-m", o.m, "First parameter");
  search->add_option("-n", o.n, "Second parameter");
  search->add_option("--t", o.t, "Decide existence for this palette size");
  search->add_flag("--exact-w", o.exact_w, "Least palette size");
  search->add_flag("--exact-W", o.exact_W, "Greatest palette size");
  search->add_option("--max-edges", o.max_edges, "Refuse larger instances");
  search->add_option("--max-nodes", o.max_nodes, "Backtracking node cap");
  search->add_option("--timeout", o.timeout, "Seconds per search");

  auto* sweep = app.add_subcommand("sweep", "Torus colorings for every palette down to 4");
  sweep->add_option("-m", o.m, "First parameter")->required();
  sweep->add_option("-n", o.n, "Second parameter")->required();
  sweep->add_option("--format", o.format, "summary or json (one document per line)")
      ->default_val("summary")
      ->check(CLI::IsMember({"summary", "json"}));

  auto* exporter = app.add_subcommand("export", "Render a coloring as DOT or CSV");
  exporter->add_option("path", o.input, "Coloring JSON, or - for stdin")->required();
  exporter->add_option("--format", o.format, "dot or csv")->required();

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", replay_path, "Manifest JSON")->required();

  std::vector<const char*> argv{"ivc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (replay->parsed()) return run_replay(replay_path);

  // Record the command without the bookkeeping flags so replays do not
  // overwrite the manifest.
  std::vector<std::string> recorded;
  for (size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--manifest") {
      ++k;
      continue;
    }
    if (args[k].rfind("--manifest=", 0) == 0) continue;
    recorded.push_back(args[k]);
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string name;
  if (generate->parsed()) {
    name = "generate";
    outcome = run_generate(o);
  } else if (verify->parsed()) {
    name = "verify";
    outcome = run_verify(o);
  } else if (bounds->parsed()) {
    name = "bounds";
    outcome = run_bounds(o);
  } else if (search->parsed()) {
    name = "search";
    outcome = run_search(o);
  } else if (sweep->parsed()) {
    name = "sweep";
    outcome = run_sweep(o);
  } else {
    name = "export";
    outcome = run_export(o);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (output_path.empty()) {
    std::cout << outcome.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Failure{kExitUsage, "cannot write " + output_path};
    out << outcome.output;
  }
  if (!manifest_path.empty()) {
    write_manifest(manifest_path, name, recorded, o, output_path, seconds, outcome);
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const Failure& f) {
    std::cerr << "ivc: " << f.message << "\n";
    return f.exit_code;
  }
}
