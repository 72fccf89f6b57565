#pragma once

#include "tutte_ss/exactmath/numbers.hpp"
#include "tutte_ss/recursion/family.hpp"

namespace tutte_ss {

// Tutte evaluations through the point recursion.
BigInt complexity(Family family, int n);                   // T(1,1)
BigInt connected_spanning_subgraphs(Family family, int n);  // T(1,2)
BigInt spanning_forests(Family family, int n);              // T(2,1)
BigInt acyclic_orientations(Family family, int n);          // T(2,0)
BigInt total_subgraphs(Family family, int n);               // T(2,2) = 2^|E|

// Closed forms for T(1,1) and the reduced components at (1,1).
struct ClosedFormSpanning {
  BigInt complexity;
  BigInt n11;
  BigInt m11;
};
// Throws Error(DomainError) if an exponent in the formulas is not an
// integer at this level.
ClosedFormSpanning closed_form_spanning(Family family, int n);
BigInt closed_form_complexity(Family family, int n);

// Acyclic orientations of level n+1 from the level-n values at (2,0):
//   sierpinski: T_n^3 - 2 (T_{2,n} + N_n)^3
//   hanoi:      (2 H_n)^3 - 2 (H_{2,n} + N_n)^3
BigInt acyclic_orientations_aggregate(Family family, int n_plus_1);

}  // namespace tutte_ss
