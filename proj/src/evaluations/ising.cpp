#include "tutte_ss/evaluations/ising.hpp"

#include "tutte_ss/errors.hpp"

namespace tutte_ss {

namespace {

void require_ising_t(const Rational& t) {
  if (t == 0 || t == 1 || t == -1) throw Error(ErrorKind::DomainError, "t must differ from 0, 1 and -1");
}

}  // namespace

UniPoly ising_partition(Family family, int n, const RecursionOptions& options) {
  const BiPoly total = reduced_triple(family, n, options).total();
  // Work in s = t^2, where x = (s+1)/(s-1) and y = s.
  const RationalFn in_s = subst_hyperbola(total);
  const UniPoly s_minus_1 = UniPoly::variable() - UniPoly(1);
  const auto rank = static_cast<unsigned>(vertex_count(family, n) - 1);
  UniPoly cleared;
  try {
    cleared = (in_s * RationalFn(s_minus_1.pow(rank))).to_polynomial();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::NotLaurent, "Ising substitution left a non-trivial denominator");
  }
  const auto edges = static_cast<UniPoly::Exponent>(edge_count(family, n));
  UniPoly z = cleared.inflate(2).shifted(-edges) * Rational(2);
  if (!z.has_integer_coefficients()) throw Error(ErrorKind::NotLaurent, "Ising partition has non-integer coefficients");
  return z;
}

Rational ising_value_at(Family family, int n, const Rational& t) {
  require_ising_t(t);
  const Rational s = t * t;
  const PointTriple p = eval_triple_at_point(family, n, (s + 1) / (s - 1), s);
  const auto rank = static_cast<long>(vertex_count(family, n) - 1);
  const auto edges = static_cast<long>(edge_count(family, n));
  return 2 * pow(Rational(s - 1), rank) * pow(t, -edges) * p.total();
}

Rational ising_product_formula_exact(int n, const Rational& t) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  if (t <= 1) throw Error(ErrorKind::DomainError, "product formula needs t > 1");
  if (n > 12) throw Error(ErrorKind::TooLarge, "exact product formula limited to level 12");
  const Rational s = t * t;
  const Rational z = (s - 1) / (s + 1);
  const Rational cosh = (s + 1) / (2 * t);
  const long p3n = pow_ui(3, static_cast<unsigned long>(n)).get_si();

  Rational psi = (z + 1) / z;
  Rational product = pow(z, p3n);
  for (int k = 1; k <= n; ++k) {
    product *= pow(psi, pow_ui(3, static_cast<unsigned long>(n - k)).get_si());
    psi = psi * psi - 3 * psi + 4;
  }
  product *= psi - 1;  // psi now holds psi_{n+1}
  return pow(Rational(2), p3n) * pow(cosh, (3 * p3n - 3) / 2) * product;
}

HighFloat ising_product_formula(Family family, int n, const HighFloat& t) {
  if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  if (t <= 1) throw Error(ErrorKind::DomainError, "product formula needs t > 1");
  if (n > 30) throw Error(ErrorKind::TooLarge, "product formula limited to level 30");
  const HighFloat s = t * t;
  const HighFloat z = (s - 1) / (s + 1);
  const HighFloat cosh = (s + 1) / (2 * t);
  const HighFloat p3n = pow(HighFloat(3), n);

  auto step = [](const HighFloat& f) { return f * f - 3 * f + 4; };
  if (family == Family::hanoi) {
    HighFloat psi = (z + 1) / z;
    HighFloat product = pow(z, p3n);
    for (int k = 1; k <= n; ++k) {
      product *= pow(psi, pow(HighFloat(3), n - k));
      psi = step(psi);
    }
    product *= psi - 1;
    return pow(HighFloat(2), p3n) * pow(cosh, (3 * p3n - 3) / 2) * product;
  }

  // phi_1 and phi_2 are given directly; the recursion starts at phi_3.
  const HighFloat root_z = sqrt(z);
  HighFloat phi = (z + 1) / root_z;
  HighFloat product = pow(root_z, p3n);
  for (int k = 1; k <= n; ++k) {
    product *= pow(phi, pow(HighFloat(3), n - k));
    phi = k == 1 ? (z * z + 1) / z : step(phi);
  }
  product *= phi - 1;
  return pow(HighFloat(2), (p3n + 3) / 2) * pow(cosh, p3n) * product;
}

}  // namespace tutte_ss
