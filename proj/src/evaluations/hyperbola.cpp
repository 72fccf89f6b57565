#include "tutte_ss/evaluations/hyperbola.hpp"

namespace tutte_ss {

HyperbolaPair hyperbola_ab(Family family, int n, const RecursionOptions& options) {
  const TutteTriple triple = tutte_triple(family, n, options);
  return {subst_hyperbola(triple.t2 + triple.t1), subst_hyperbola(triple.t1 * 2L + triple.t0)};
}

HyperbolaPair hyperbola_step(Family family, const HyperbolaPair& level_n) {
  const UniPoly y = UniPoly::variable();
  const RationalFn& a = level_n.a;
  const RationalFn& b = level_n.b;
  const RationalFn two(UniPoly(2));
  if (family == Family::sierpinski) {
    const RationalFn half_w(UniPoly(y - UniPoly(1)) * Rational(1, 2));
    const RationalFn two_a_b = two * a + b;
    return {half_w * a * a * two_a_b, half_w * b * two_a_b * (a + b)};
  }
  const RationalFn ry(y);
  const UniPoly w = y - UniPoly(1);
  const RationalFn common = b + ry * b + two * ry * a;
  const RationalFn next_a = RationalFn(y + UniPoly(1), w * Rational(2)) * a * a * common;
  const RationalFn ry2 = ry * ry;
  const RationalFn quad = RationalFn(UniPoly(4)) * ry * a * b + ry2 * a * b + ry2 * b * b +
                          RationalFn(UniPoly(3)) * a * b + two * ry * b * b + RationalFn(UniPoly(4)) * a * a + b * b;
  const RationalFn next_b = common * quad * RationalFn(UniPoly(1), w * w * Rational(2));
  return {next_a, next_b};
}

HyperbolaPair hyperbola_residual(Family family, int n, const RecursionOptions& options) {
  const HyperbolaPair predicted = hyperbola_step(family, hyperbola_ab(family, n, options));
  const HyperbolaPair actual = hyperbola_ab(family, n + 1, options);
  return {(actual.a - predicted.a).reduced(), (actual.b - predicted.b).reduced()};
}

}  // namespace tutte_ss
