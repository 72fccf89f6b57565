#pragma once

#include "tutte_ss/evaluations/highprec.hpp"
#include "tutte_ss/recursion/family.hpp"

#include <vector>

namespace tutte_ss {

struct GrowthEntry {
  int level = 0;
  HighFloat log_complexity_over_v;
};

struct GrowthSeries {
  Family family = Family::sierpinski;
  std::vector<GrowthEntry> entries;
};

// log tau(G_n) / |V(G_n)| for n = 1..n_max from exact complexities.
GrowthSeries growth_constant_series(Family family, int n_max);

// Limits: (1/3) log 2 + (1/2) log 3 + (1/6) log 5 for sierpinski,
// (1/4)(log 3 + log 5) for hanoi.
HighFloat growth_constant_limit(Family family);

}  // namespace tutte_ss
