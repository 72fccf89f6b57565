#pragma once

#include "tutte_ss/exactmath/unipoly.hpp"
#include "tutte_ss/recursion/engine.hpp"

namespace tutte_ss {

// chi(lambda) = (-1)^(|V|-1) lambda T(1-lambda, 0), from the symbolic total.
UniPoly chromatic_polynomial(Family family, int n, const RecursionOptions& options = {});

// Same polynomial through the undivided triple recursion run directly in
// Q[lambda] (x = 1 - lambda, y = 0), dividing by lambda exactly at each step.
UniPoly chromatic_polynomial_p_recursion(Family family, int n);

// P_{i,n}(lambda) = T_{i,n}(1 - lambda, 0) at an integer lambda.
struct ChromaticPValues {
  Rational p2, p1, p0;
  Rational total() const { return p2 + 3 * p1 + p0; }
};
ChromaticPValues chromatic_p_values(Family family, int n, long lambda);
BigInt chromatic_at(Family family, int n, long lambda);

struct ThreeColorCheck {
  bool ok = false;
  ChromaticPValues values;
  BigInt chi3;
};
// Sierpinski only: P_{2,n}(3) = (-1)^(n+1) 2, P_{1,n}(3) = (-1)^n 3,
// P_{0,n}(3) = (-1)^(n+1) 9 and chi_n(3) = 6.
ThreeColorCheck unique_three_colorability_check(int n);

// R(G, p) = p^(|V|-1) sum_j a_j (1-p)^(c-j) where T(1, y) = sum_j a_j y^j
// and c is the cycle rank.
UniPoly reliability_polynomial(Family family, int n, const RecursionOptions& options = {});
// Point form for large levels: p^(|V|-1) (1-p)^c T(1, 1/(1-p)); p in [0, 1].
Rational reliability_at(Family family, int n, const Rational& p);

}  // namespace tutte_ss
