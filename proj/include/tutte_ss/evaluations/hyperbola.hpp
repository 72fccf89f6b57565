#pragma once

#include "tutte_ss/exactmath/rational_fn.hpp"
#include "tutte_ss/recursion/engine.hpp"

#include <utility>

namespace tutte_ss {

// A_n = T_2 + T_1 and B_n = 2 T_1 + T_0 on the hyperbola x = (y+1)/(y-1).
struct HyperbolaPair {
  RationalFn a;
  RationalFn b;
};

HyperbolaPair hyperbola_ab(Family family, int n, const RecursionOptions& options = {});

// (A_{n+1}, B_{n+1}) predicted from (A_n, B_n) by the closed two-term
// recursion on the hyperbola.
HyperbolaPair hyperbola_step(Family family, const HyperbolaPair& level_n);

// Differences between hyperbola_ab(n+1) and hyperbola_step(hyperbola_ab(n));
// both are zero when the identities hold.
HyperbolaPair hyperbola_residual(Family family, int n, const RecursionOptions& options = {});

}  // namespace tutte_ss
