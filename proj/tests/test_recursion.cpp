#include "tutte_ss/errors.hpp"
#include "tutte_ss/recursion/engine.hpp"
#include "tutte_ss/recursion/triple_json.hpp"

#include <doctest.h>

using namespace tutte_ss;

TEST_CASE("level one is the triangle") {
  const BiPoly t = reduced_triple(Family::sierpinski, 1).total();
  CHECK(t == BiPoly::monomial(1, 2, 0) + BiPoly::x() + BiPoly::y());
  CHECK(reduced_triple(Family::hanoi, 1).total() == t);
}

TEST_CASE("level two totals") {
  const BiPoly g2 = reduced_triple(Family::sierpinski, 2).total();
  CHECK(g2.eval(1, 1) == 54);
  CHECK(g2.eval(1, 2) == 160);
  CHECK(g2.eval(2, 1) == 279);
  CHECK(g2.eval(2, 0) == 162);
  const BiPoly s2 = reduced_triple(Family::hanoi, 2).total();
  CHECK(s2.coeff(8, 0) == 1);
  CHECK(s2.coeff(6, 1) == 3);
  CHECK(s2.coeff(0, 4) == 1);
  CHECK(s2.eval(1, 1) == 135);
  CHECK(s2.eval(1, 2) == 352);
  CHECK(s2.eval(2, 1) == 2680);
  CHECK(s2.eval(2, 0) == 1674);
}

TEST_CASE("expanded triple carries the x - 1 factors") {
  for (Family f : {Family::sierpinski, Family::hanoi}) {
    for (int n = 1; n <= 3; ++n) {
      const TutteTriple t = tutte_triple(f, n);
      const ReducedTriple r = reduced_triple(f, n);
      CHECK(divide_exact_x_minus_1(t.t1, 1) == r.n);
      CHECK(divide_exact_x_minus_1(t.t0, 2) == r.m);
      CHECK(t.total() == r.total());
      CHECK(t.total().all_coefficients_nonnegative());
    }
  }
}

TEST_CASE("point recursion agrees with the symbolic polynomial") {
  for (Family f : {Family::sierpinski, Family::hanoi}) {
    const ReducedTriple r = reduced_triple(f, 3);
    for (auto [x0, y0] : {std::pair{Rational(1, 3), Rational(-2)}, std::pair{Rational(5, 2), Rational(7, 4)}}) {
      const PointTriple p = eval_triple_at_point(f, 3, x0, y0);
      CHECK(p.t2 == r.t2.eval(x0, y0));
      CHECK(p.n == r.n.eval(x0, y0));
      CHECK(p.m == r.m.eval(x0, y0));
    }
    const auto series = point_series(f, 4, 1, 1);
    REQUIRE(series.size() == 4);
    CHECK(series.back().total() == eval_triple_at_point(f, 4, 1, 1).total());
  }
}

TEST_CASE("join identity") {
  CHECK(join_identity_residual(1).is_zero());
  CHECK(join_identity_residual(2).is_zero());
  CHECK(join_identity_residual_at(4, Rational(3, 7), Rational(-5, 2)) == 0);
  CHECK(contracted_tutte(2) == reduced_triple(Family::sierpinski, 2).total());
}

TEST_CASE("levels and caps are enforced") {
  CHECK_THROWS_AS(reduced_triple(Family::sierpinski, 0), Error);
  RecursionOptions tiny;
  tiny.term_cap = 50;
  clear_triple_cache();
  try {
    reduced_triple(Family::hanoi, 4, tiny);
    FAIL("expected a resource cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceCap);
  }
}

TEST_CASE("perturbation changes the result and bypasses the cache") {
  RecursionOptions bad;
  bad.perturb = 1;
  const BiPoly good = reduced_triple(Family::sierpinski, 2).total();
  CHECK(reduced_triple(Family::sierpinski, 2, bad).total() != good);
  CHECK(reduced_triple(Family::sierpinski, 2).total() == good);
}

TEST_CASE("triple json round trip") {
  const ReducedTriple r = reduced_triple(Family::hanoi, 2);
  const Json j = to_json(r);
  CHECK(j["family"] == "hanoi");
  CHECK(j["level"] == 2);
  const ReducedTriple back = reduced_triple_from_json(j);
  CHECK(back.t2 == r.t2);
  CHECK(back.n == r.n);
  CHECK(back.m == r.m);
}

TEST_CASE("family sizes") {
  CHECK(vertex_count(Family::sierpinski, 3) == 15);
  CHECK(edge_count(Family::sierpinski, 3) == 27);
  CHECK(vertex_count(Family::hanoi, 3) == 27);
  CHECK(edge_count(Family::hanoi, 3) == 39);
  CHECK(cycle_rank(Family::hanoi, 3) == 13);
  CHECK(family_from_string("hanoi") == Family::hanoi);
  CHECK_THROWS_AS(family_from_string("tree"), Error);
}
