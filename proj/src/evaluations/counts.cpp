#include "tutte_ss/evaluations/counts.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/recursion/engine.hpp"

namespace tutte_ss {

namespace {

BigInt total_at(Family family, int n, long x0, long y0) {
  return to_integer(eval_triple_at_point(family, n, Rational(x0), Rational(y0)).total());
}

// Exact (numerator / 4) or (numerator / 2) as an exponent.
unsigned long exact_exponent(const BigInt& numerator, unsigned long divisor) {
  if (numerator < 0 || numerator % divisor != 0) {
    throw Error(ErrorKind::DomainError, "closed-form exponent " + to_string(numerator) + "/" +
                                            std::to_string(divisor) + " is not a nonnegative integer");
  }
  BigInt q = numerator / divisor;
  if (!q.fits_ulong_p()) throw Error(ErrorKind::TooLarge, "closed-form exponent too large");
  return q.get_ui();
}

}  // namespace

BigInt complexity(Family family, int n) { return total_at(family, n, 1, 1); }
BigInt connected_spanning_subgraphs(Family family, int n) { return total_at(family, n, 1, 2); }
BigInt spanning_forests(Family family, int n) { return total_at(family, n, 2, 1); }
BigInt acyclic_orientations(Family family, int n) { return total_at(family, n, 2, 0); }
BigInt total_subgraphs(Family family, int n) { return total_at(family, n, 2, 2); }

ClosedFormSpanning closed_form_spanning(Family family, int n) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  const BigInt p3n = pow_ui(3, static_cast<unsigned long>(n));
  const BigInt p3n1 = pow_ui(3, static_cast<unsigned long>(n - 1));
  const long two_n = 2L * n;
  const long six_n = 6L * n;
  ClosedFormSpanning out;
  if (family == Family::sierpinski) {
    const unsigned long e2 = exact_exponent(p3n1 - 1, 2);
    out.complexity = pow_ui(2, e2) * pow_ui(3, exact_exponent(p3n + two_n - 1, 4)) *
                     pow_ui(5, exact_exponent(p3n1 - two_n + 1, 4));
    out.n11 = pow_ui(2, e2) * pow_ui(3, exact_exponent(p3n - two_n - 1, 4)) *
              pow_ui(5, exact_exponent(p3n1 + two_n - 3, 4));
    out.m11 = pow_ui(2, e2) * pow_ui(3, exact_exponent(p3n - six_n + 3, 4)) *
              pow_ui(5, exact_exponent(p3n1 + six_n - 7, 4));
  } else {
    const unsigned long e5 = exact_exponent(p3n - two_n - 1, 4);
    const BigInt diff = pow_ui(5, static_cast<unsigned long>(n)) - p3n;
    if (diff % 2 != 0) throw Error(ErrorKind::DomainError, "(5^n - 3^n)/2 is not an integer");
    const BigInt half = diff / 2;
    out.complexity = pow_ui(3, exact_exponent(p3n + two_n - 1, 4)) * pow_ui(5, e5);
    out.n11 = pow_ui(3, exact_exponent(p3n - two_n - 1, 4)) * pow_ui(5, e5) * half;
    out.m11 = pow_ui(3, exact_exponent(p3n - six_n + 3, 4)) * pow_ui(5, e5) * half * half;
  }
  return out;
}

BigInt closed_form_complexity(Family family, int n) { return closed_form_spanning(family, n).complexity; }

BigInt acyclic_orientations_aggregate(Family family, int n_plus_1) {
  if (n_plus_1 < 2) throw Error(ErrorKind::LevelOutOfRange, "aggregate identity starts at level 2");
  PointTriple prev = eval_triple_at_point(family, n_plus_1 - 1, Rational(2), Rational(0));
  BigInt total = to_integer(prev.total());
  BigInt inner = to_integer(Rational(prev.t2 + prev.n));
  BigInt head = family == Family::sierpinski ? total : BigInt(2 * total);
  return head * head * head - 2 * inner * inner * inner;
}

}  // namespace tutte_ss
