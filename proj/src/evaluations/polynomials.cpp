#include "tutte_ss/evaluations/polynomials.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/recursion/steps.hpp"

namespace tutte_ss {

namespace {

Rational sign_of_rank(Family family, int n) { return (vertex_count(family, n) - 1) % 2 == 0 ? 1 : -1; }

}  // namespace

UniPoly chromatic_polynomial(Family family, int n, const RecursionOptions& options) {
  BiPoly total = reduced_triple(family, n, options).total();
  return UniPoly::variable() * subst_chromatic(total) * sign_of_rank(family, n);
}

UniPoly chromatic_polynomial_p_recursion(Family family, int n) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  const UniPoly lambda = UniPoly::variable();
  const UniPoly u = -lambda;  // x - 1 at x = 1 - lambda
  const UniPoly w(-1);        // y - 1 at y = 0
  std::function<UniPoly(const UniPoly&)> divide = [&](const UniPoly& p) { return p.divide_exact(u); };

  FullValues<UniPoly> values{UniPoly(2), u, lambda * lambda};
  for (int level = 1; level < n; ++level) values = full_step(family, values, u, w, divide);
  UniPoly p_total = values.t2 + values.t1 * Rational(3) + values.t0;
  return lambda * p_total * sign_of_rank(family, n);
}

ChromaticPValues chromatic_p_values(Family family, int n, long lambda) {
  PointTriple pt = eval_triple_at_point(family, n, Rational(1 - lambda), Rational(0));
  return {pt.t2, pt.t1(), pt.t0()};
}

BigInt chromatic_at(Family family, int n, long lambda) {
  Rational value = sign_of_rank(family, n) * lambda * chromatic_p_values(family, n, lambda).total();
  return to_integer(value);
}

ThreeColorCheck unique_three_colorability_check(int n) {
  ThreeColorCheck out;
  out.values = chromatic_p_values(Family::sierpinski, n, 3);
  const long odd = (n % 2 == 1) ? 1 : -1;  // (-1)^(n+1)
  out.chi3 = chromatic_at(Family::sierpinski, n, 3);
  out.ok = out.values.p2 == 2 * odd && out.values.p1 == -3 * odd && out.values.p0 == 9 * odd && out.chi3 == 6;
  return out;
}

UniPoly reliability_polynomial(Family family, int n, const RecursionOptions& options) {
  // T_1 and T_0 vanish at x = 1, so T(1, y) = T_2(1, y).
  const UniPoly t_at_1 = reduced_triple(family, n, options).t2.restrict_x(1);
  const auto rank = static_cast<unsigned>(vertex_count(family, n) - 1);
  const auto cycles = static_cast<UniPoly::Exponent>(cycle_rank(family, n));
  if (t_at_1.degree() > cycles) throw Error(ErrorKind::DomainError, "deg_y T(1, y) exceeds the cycle rank");

  const UniPoly p = UniPoly::variable();
  const UniPoly q = UniPoly(1) - p;
  // Horner over descending powers of (1 - p).
  UniPoly acc;
  for (UniPoly::Exponent j = 0; j <= cycles; ++j) {
    acc = acc * q + UniPoly(t_at_1.coeff(j));
  }
  return p.pow(rank) * acc;
}

Rational reliability_at(Family family, int n, const Rational& p) {
  if (p < 0 || p > 1) throw Error(ErrorKind::DomainError, "p must lie in [0, 1]");
  const auto rank = static_cast<long>(vertex_count(family, n) - 1);
  const auto cycles = static_cast<long>(cycle_rank(family, n));
  if (p == 1) return 1;  // connected graph, every edge open
  if (p == 0) return 0;
  Rational y0 = 1 / Rational(1 - p);
  Rational t = eval_triple_at_point(family, n, Rational(1), y0).total();
  return pow(p, rank) * pow(Rational(1 - p), cycles) * t;
}

}  // namespace tutte_ss
