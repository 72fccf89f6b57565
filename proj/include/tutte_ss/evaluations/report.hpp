#pragma once

#include "tutte_ss/exactmath/poly_json.hpp"
#include "tutte_ss/oracle/oracle.hpp"
#include "tutte_ss/recursion/family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tutte_ss {

enum class Provenance { recursion, closedForm, oracle };
std::string_view to_string(Provenance provenance);

struct ProvenancedValue {
  Provenance source;
  BigInt value;
};

struct ReportEntry {
  std::string name;
  std::vector<ProvenancedValue> values;

  bool consistent() const;
  const BigInt& value() const { return values.front().value; }
};

// One level's named specializations. Entry order is fixed:
// complexity, connectedSpanning, forests, acyclicOrientations,
// totalSubgraphs, chromaticAt3.
struct EvaluationReport {
  Family family = Family::sierpinski;
  int level = 1;
  std::vector<ReportEntry> entries;

  bool consistent() const;
  const ReportEntry& entry(std::string_view name) const;
};

struct ReportOptions {
  bool include_oracles = true;
  oracle::Limits limits;
  // Largest vertex count handed to the matrix-tree oracle.
  std::uint32_t matrix_tree_max_vertices = 400;
};

EvaluationReport build_report(Family family, int n, const ReportOptions& options = {});

Json to_json(const EvaluationReport& report);
std::string csv_header();
std::string to_csv_row(const EvaluationReport& report);

}  // namespace tutte_ss
