#pragma once

#include "tutte_ss/evaluations/highprec.hpp"
#include "tutte_ss/exactmath/unipoly.hpp"
#include "tutte_ss/recursion/engine.hpp"

namespace tutte_ss {

// Z_n as a Laurent polynomial in t = e^(beta J):
//   2 (t^2-1)^(|V|-1) t^(-|E|) T((t^2+1)/(t^2-1), t^2).
// Throws Error(NotLaurent) if the substitution does not clear.
UniPoly ising_partition(Family family, int n, const RecursionOptions& options = {});

// The same expression evaluated exactly at a rational t (t != 0, +-1) using
// the point recursion.
Rational ising_value_at(Family family, int n, const Rational& t);

// Product formulas in z = tanh(beta J) = (t^2-1)/(t^2+1):
//   hanoi:      2^(3^n) cosh^((3^(n+1)-3)/2) Psi_n(z)     (exact for rational t)
//   sierpinski: 2^((3^n+3)/2) cosh^(3^n) Phi_n(z)        (needs sqrt(z))
// Both throw Error(DomainError) for t <= 1.
Rational ising_product_formula_exact(int n, const Rational& t);  // hanoi
HighFloat ising_product_formula(Family family, int n, const HighFloat& t);

}  // namespace tutte_ss
