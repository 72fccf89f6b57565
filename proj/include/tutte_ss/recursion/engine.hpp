#pragma once

#include "tutte_ss/exactmath/bipoly.hpp"
#include "tutte_ss/recursion/family.hpp"

#include <cstddef>
#include <vector>

namespace tutte_ss {

// (T_2, T_1, T_0) for one level; the Tutte polynomial is t2 + 3 t1 + t0
// (the three rotated T_1 classes are stored once).
struct TutteTriple {
  Family family = Family::sierpinski;
  int level = 1;
  BiPoly t2, t1, t0;

  BiPoly total() const;
};

// t1 = (x-1) n, t0 = (x-1)^2 m.
struct ReducedTriple {
  Family family = Family::sierpinski;
  int level = 1;
  BiPoly t2, n, m;

  TutteTriple expand() const;
  BiPoly total() const;
};

// Reduced triple evaluated at a fixed rational point.
struct PointTriple {
  Family family = Family::sierpinski;
  int level = 1;
  Rational x0, y0;
  Rational t2, n, m;

  Rational t1() const { return (x0 - 1) * n; }
  Rational t0() const { return (x0 - 1) * (x0 - 1) * m; }
  Rational total() const { return t2 + 3 * t1() + t0(); }
};

// Default cap on stored symbolic terms (5e5); the environment variable
// TUTTE_SS_TERM_CAP overrides it.
std::size_t default_term_cap();

struct RecursionOptions {
  std::size_t term_cap = default_term_cap();
  // Nonzero only in verification self-tests; bypasses the cache.
  long perturb = 0;
};

// Symbolic recursion. Throws Error(LevelOutOfRange) for n < 1 and
// Error(ResourceCap) when the next level could exceed options.term_cap.
ReducedTriple reduced_triple(Family family, int n, const RecursionOptions& options = {});
ReducedTriple sierpinski_reduced(int n, const RecursionOptions& options = {});
ReducedTriple hanoi_reduced(int n, const RecursionOptions& options = {});

TutteTriple tutte_triple(Family family, int n, const RecursionOptions& options = {});
TutteTriple sierpinski_triple(int n, const RecursionOptions& options = {});
TutteTriple hanoi_triple(int n, const RecursionOptions& options = {});

// The undivided recursion in (t2, t1, t0), dividing by x - 1 exactly at
// every step. Independent of the reduced route; uncached.
TutteTriple undivided_triple(Family family, int n);

// Runs the reduced recursion over Q at (x0, y0); never divides, so x0 = 1
// is fine.
PointTriple eval_triple_at_point(Family family, int n, const Rational& x0, const Rational& y0, long perturb = 0);
// Levels 1..n at the same point.
std::vector<PointTriple> point_series(Family family, int n, const Rational& x0, const Rational& y0, long perturb = 0);

// T(I_n): one Sierpinski-shaped step applied to the Hanoi triple of level n-1.
BiPoly contracted_tutte(int n, const RecursionOptions& options = {});
Rational contracted_tutte_at(int n, const Rational& x0, const Rational& y0);

// H_{n+1} - (x^2+x+1) H_n^3 - T(I_{n+1}); the zero polynomial.
BiPoly join_identity_residual(int n, const RecursionOptions& options = {});
Rational join_identity_residual_at(int n, const Rational& x0, const Rational& y0);

// Drops memoized symbolic triples.
void clear_triple_cache();

}  // namespace tutte_ss
