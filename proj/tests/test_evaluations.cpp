#include "tutte_ss/errors.hpp"
#include "tutte_ss/evaluations/counts.hpp"
#include "tutte_ss/evaluations/growth.hpp"
#include "tutte_ss/evaluations/hyperbola.hpp"
#include "tutte_ss/evaluations/ising.hpp"
#include "tutte_ss/evaluations/polynomials.hpp"
#include "tutte_ss/evaluations/report.hpp"

#include <doctest.h>

using namespace tutte_ss;

TEST_CASE("counts and closed forms") {
  CHECK(complexity(Family::sierpinski, 1) == 3);
  CHECK(complexity(Family::sierpinski, 2) == 54);
  CHECK(complexity(Family::hanoi, 3) == pow_ui(3, 8) * pow_ui(5, 5));
  CHECK(connected_spanning_subgraphs(Family::sierpinski, 1) == 4);
  CHECK(spanning_forests(Family::sierpinski, 1) == 7);
  CHECK(acyclic_orientations(Family::sierpinski, 1) == 6);
  CHECK(total_subgraphs(Family::hanoi, 3) == pow_ui(2, 39));
  const ClosedFormSpanning g2 = closed_form_spanning(Family::sierpinski, 2);
  CHECK(g2.complexity == 54);
  CHECK(g2.n11 == 30);
  CHECK(g2.m11 == 50);
  const ClosedFormSpanning s2 = closed_form_spanning(Family::hanoi, 2);
  CHECK(s2.n11 == 120);
  CHECK(s2.m11 == 320);
  for (int n = 1; n <= 8; ++n) {
    CHECK(closed_form_complexity(Family::sierpinski, n) == complexity(Family::sierpinski, n));
    CHECK(closed_form_complexity(Family::hanoi, n) == complexity(Family::hanoi, n));
  }
  CHECK(acyclic_orientations_aggregate(Family::sierpinski, 2) == 162);
  CHECK(acyclic_orientations_aggregate(Family::hanoi, 2) == 1674);
}

TEST_CASE("chromatic polynomials") {
  const UniPoly l = UniPoly::variable();
  const UniPoly one(1), two(2);
  CHECK(chromatic_polynomial(Family::sierpinski, 1) == l * (l - one) * (l - two));
  const UniPoly quartic = l.pow(4) - UniPoly(5) * l.pow(3) + UniPoly(10) * l.pow(2) - UniPoly(10) * l + UniPoly(5);
  CHECK(chromatic_polynomial(Family::hanoi, 2) == l * (l - two).pow(3) * (l - one) * quartic);
  for (Family f : {Family::sierpinski, Family::hanoi}) {
    for (int n = 1; n <= 3; ++n) {
      const UniPoly chi = chromatic_polynomial(f, n);
      CHECK(chi == chromatic_polynomial_p_recursion(f, n));
      for (long zero : {0L, 1L, 2L}) CHECK(chi.eval(zero) == 0);
      CHECK(chi.eval(3) == chromatic_at(f, n, 3));
    }
  }
  CHECK(chromatic_at(Family::hanoi, 2, 3) == 66);
}

TEST_CASE("unique 3-colourability values") {
  const ThreeColorCheck one = unique_three_colorability_check(1);
  CHECK(one.ok);
  CHECK(one.values.p2 == 2);
  CHECK(one.values.p1 == -3);
  CHECK(one.values.p0 == 9);
  const ThreeColorCheck two = unique_three_colorability_check(2);
  CHECK(two.values.p2 == -2);
  CHECK(two.values.p1 == 3);
  CHECK(two.values.p0 == -9);
  for (int n = 1; n <= 8; ++n) CHECK(unique_three_colorability_check(n).chi3 == 6);
}

TEST_CASE("reliability") {
  const UniPoly p = UniPoly::variable();
  CHECK(reliability_polynomial(Family::sierpinski, 1) == UniPoly(3) * p.pow(2) - UniPoly(2) * p.pow(3));
  const UniPoly r = reliability_polynomial(Family::sierpinski, 2);
  CHECK(r == UniPoly::from_coefficients({0, 0, 0, 0, 0, 54, -153, 168, -84, 16}));
  CHECK(r.eval(Rational(1, 3)) == reliability_at(Family::sierpinski, 2, Rational(1, 3)));
  CHECK(reliability_at(Family::hanoi, 5, 0) == 0);
  CHECK(reliability_at(Family::hanoi, 5, 1) == 1);
  CHECK_THROWS_AS(reliability_at(Family::hanoi, 2, Rational(3, 2)), Error);
}

TEST_CASE("Ising partition functions") {
  const UniPoly g1 = ising_partition(Family::sierpinski, 1);
  CHECK(g1 == UniPoly::monomial(2, 3) + UniPoly::monomial(6, -1));
  const UniPoly g2 = ising_partition(Family::sierpinski, 2);
  CHECK(g2 == UniPoly::monomial(2, 9) + UniPoly::monomial(6, 5) + UniPoly::monomial(30, 1) + UniPoly::monomial(26, -3));
  for (Family f : {Family::sierpinski, Family::hanoi}) {
    for (int n = 1; n <= 3; ++n) {
      const UniPoly z = ising_partition(f, n);
      CHECK(z.eval(1) == pow_ui(2, vertex_count(f, n)));
      CHECK(z.leading_coeff() == 2);
      CHECK(z.degree() == static_cast<UniPoly::Exponent>(edge_count(f, n)));
      for (const auto& [e, c] : z.terms()) {
        CHECK((e - static_cast<UniPoly::Exponent>(edge_count(f, n))) % 2 == 0);
        CHECK(c > 0);
      }
      CHECK(z.eval(Rational(5, 3)) == ising_value_at(f, n, Rational(5, 3)));
    }
  }
  CHECK(ising_product_formula_exact(1, Rational(3, 2)) == Rational(43, 4));
  CHECK(ising_product_formula_exact(4, Rational(7, 5)) == ising_value_at(Family::hanoi, 4, Rational(7, 5)));
  const HighFloat phi = ising_product_formula(Family::sierpinski, 2, HighFloat(2));
  const HighFloat exact = to_high(ising_value_at(Family::sierpinski, 2, 2));
  CHECK(abs(phi - exact) / exact < HighFloat("1e-30"));
  CHECK_THROWS_AS(ising_product_formula_exact(2, 1), Error);
}

TEST_CASE("hyperbola pairs") {
  const UniPoly y = UniPoly::variable();
  const HyperbolaPair s1 = hyperbola_ab(Family::sierpinski, 1);
  CHECK(s1.a == RationalFn(y * (y + UniPoly(1)), y - UniPoly(1)));
  CHECK(s1.b == RationalFn(UniPoly(4) * y, (y - UniPoly(1)).pow(2)));
  for (Family f : {Family::sierpinski, Family::hanoi}) {
    const HyperbolaPair r = hyperbola_residual(f, 2);
    CHECK(r.a.is_zero());
    CHECK(r.b.is_zero());
  }
}

TEST_CASE("growth constants") {
  const GrowthSeries s = growth_constant_series(Family::sierpinski, 10);
  REQUIRE(s.entries.size() == 10);
  CHECK(abs(s.entries[0].log_complexity_over_v - log(HighFloat(3)) / 3) < HighFloat("1e-40"));
  CHECK(abs(s.entries.back().log_complexity_over_v - growth_constant_limit(Family::sierpinski)) < HighFloat("1e-3"));
  CHECK(to_string(growth_constant_limit(Family::sierpinski), 6) == "1.04859");
}

TEST_CASE("evaluation reports") {
  const EvaluationReport r = build_report(Family::hanoi, 2);
  CHECK(r.consistent());
  CHECK(r.entry("complexity").value() == 135);
  CHECK(r.entry("connectedSpanning").values.size() == 2);
  CHECK(r.entry("totalSubgraphs").value() == 4096);
  CHECK(r.entry("chromaticAt3").value() == 66);
  const Json j = to_json(r);
  CHECK(j["acyclicOrientations"] == "1674");
  CHECK(j["provenance"]["complexity"]["oracle"] == "135");
  CHECK(to_csv_row(r).rfind("hanoi,2,135,352,2680,1674,4096,66,", 0) == 0);
  const EvaluationReport big = build_report(Family::sierpinski, 9);
  CHECK(big.entry("complexity").values.size() == 2);
  CHECK(big.consistent());
}
