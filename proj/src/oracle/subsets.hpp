#pragma once

#include "tutte_ss/oracle/oracle.hpp"

#include <vector>

namespace tutte_ss::oracle::detail {

// count[k][s]: spanning subgraphs with k components and s edges.
struct SubsetTable {
  std::uint32_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::vector<std::uint64_t>> count;
};

SubsetTable subset_table(const Multigraph& g, const Limits& limits);

}  // namespace tutte_ss::oracle::detail
