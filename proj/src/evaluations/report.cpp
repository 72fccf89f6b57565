#include "tutte_ss/evaluations/report.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/evaluations/counts.hpp"
#include "tutte_ss/evaluations/polynomials.hpp"
#include "tutte_ss/graphs/builders.hpp"

#include <optional>
#include <sstream>

namespace tutte_ss {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::recursion: return "recursion";
    case Provenance::closedForm: return "closedForm";
    case Provenance::oracle: return "oracle";
  }
  return "unknown";
}

bool ReportEntry::consistent() const {
  for (const auto& v : values) {
    if (v.value != values.front().value) return false;
  }
  return true;
}

bool EvaluationReport::consistent() const {
  for (const auto& e : entries) {
    if (!e.consistent()) return false;
  }
  return true;
}

const ReportEntry& EvaluationReport::entry(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::InvalidArgument, "no report entry named " + std::string(name));
}

namespace {

Multigraph build_graph(Family family, int n) {
  return family == Family::sierpinski ? build_sierpinski(n).graph : build_hanoi(n, false).graph;
}

bool colorings_fit(std::uint64_t vertices, std::uint64_t limit) {
  BigInt states = pow_ui(3, vertices);
  return states <= BigInt(std::to_string(limit));
}

}  // namespace

EvaluationReport build_report(Family family, int n, const ReportOptions& options) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  EvaluationReport report;
  report.family = family;
  report.level = n;

  const std::uint64_t vertices = vertex_count(family, n);
  const std::uint64_t edges = edge_count(family, n);
  const bool small_edges = options.include_oracles && edges <= options.limits.max_edges;
  const bool tree_oracle =
      options.include_oracles && n <= kMaxBuildLevel && vertices <= options.matrix_tree_max_vertices;
  const bool coloring_oracle = options.include_oracles && colorings_fit(vertices, options.limits.max_assignments);

  std::optional<Multigraph> graph;
  if (small_edges || tree_oracle || coloring_oracle) graph = build_graph(family, n);

  auto add = [&](std::string name) -> ReportEntry& {
    report.entries.push_back({std::move(name), {}});
    return report.entries.back();
  };

  ReportEntry& tau = add("complexity");
  tau.values.push_back({Provenance::recursion, complexity(family, n)});
  tau.values.push_back({Provenance::closedForm, closed_form_complexity(family, n)});
  if (tree_oracle) tau.values.push_back({Provenance::oracle, oracle::spanning_tree_count(*graph)});

  ReportEntry& connected = add("connectedSpanning");
  connected.values.push_back({Provenance::recursion, connected_spanning_subgraphs(family, n)});
  if (small_edges) {
    connected.values.push_back(
        {Provenance::oracle, oracle::count_connected_spanning_subgraphs(*graph, options.limits)});
  }

  ReportEntry& forests = add("forests");
  forests.values.push_back({Provenance::recursion, spanning_forests(family, n)});
  if (small_edges) forests.values.push_back({Provenance::oracle, oracle::count_spanning_forests(*graph, options.limits)});

  ReportEntry& acyclic = add("acyclicOrientations");
  acyclic.values.push_back({Provenance::recursion, acyclic_orientations(family, n)});
  if (n >= 2) acyclic.values.push_back({Provenance::closedForm, acyclic_orientations_aggregate(family, n)});
  if (small_edges) {
    acyclic.values.push_back({Provenance::oracle, oracle::count_acyclic_orientations(*graph, options.limits)});
  }

  ReportEntry& total = add("totalSubgraphs");
  total.values.push_back({Provenance::recursion, total_subgraphs(family, n)});
  total.values.push_back({Provenance::closedForm, pow_ui(2, edges)});

  ReportEntry& chromatic = add("chromaticAt3");
  chromatic.values.push_back({Provenance::recursion, chromatic_at(family, n, 3)});
  if (family == Family::sierpinski) chromatic.values.push_back({Provenance::closedForm, BigInt(6)});
  if (coloring_oracle) {
    chromatic.values.push_back({Provenance::oracle, oracle::count_proper_colorings(*graph, 3, options.limits)});
  }
  return report;
}

Json to_json(const EvaluationReport& report) {
  Json out;
  out["family"] = std::string(to_string(report.family));
  out["level"] = report.level;
  for (const auto& e : report.entries) out[e.name] = to_string(e.value());
  Json provenance = Json::object();
  for (const auto& e : report.entries) {
    Json sources = Json::object();
    for (const auto& v : e.values) sources[std::string(to_string(v.source))] = to_string(v.value);
    provenance[e.name] = std::move(sources);
  }
  out["provenance"] = std::move(provenance);
  out["consistent"] = report.consistent();
  return out;
}

std::string csv_header() {
  return "family,level,complexity,connectedSpanning,forests,acyclicOrientations,totalSubgraphs,chromaticAt3,"
         "provenances,consistent";
}

std::string to_csv_row(const EvaluationReport& report) {
  std::ostringstream row;
  row << to_string(report.family) << ',' << report.level;
  for (const auto& e : report.entries) row << ',' << to_string(e.value());
  // Provenance tags per entry, e.g. recursion+closedForm+oracle, separated by ';'.
  row << ',';
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (i) row << ';';
    const auto& values = report.entries[i].values;
    for (std::size_t j = 0; j < values.size(); ++j) row << (j ? "+" : "") << to_string(values[j].source);
  }
  row << ',' << (report.consistent() ? "true" : "false");
  return row.str();
}

}  // namespace tutte_ss
