// Acceptance suite: one PASS/FAIL line per criterion with its wall time and
// time budget. Exit status is nonzero if any criterion fails.

#include "tutte_ss/errors.hpp"
#include "tutte_ss/evaluations/counts.hpp"
#include "tutte_ss/evaluations/growth.hpp"
#include "tutte_ss/evaluations/hyperbola.hpp"
#include "tutte_ss/evaluations/ising.hpp"
#include "tutte_ss/evaluations/polynomials.hpp"
#include "tutte_ss/graphs/builders.hpp"
#include "tutte_ss/oracle/oracle.hpp"
#include "tutte_ss/recursion/engine.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tutte_ss;

namespace {

constexpr Family kFamilies[] = {Family::sierpinski, Family::hanoi};

// Collects failure reasons for one criterion.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) reasons_.push_back(what);
  }
  bool empty() const { return reasons_.empty(); }
  std::string joined() const {
    std::string out;
    for (std::size_t i = 0; i < reasons_.size() && i < 5; ++i) out += (i ? "; " : "") + reasons_[i];
    if (reasons_.size() > 5) out += "; ...";
    return out;
  }

 private:
  std::vector<std::string> reasons_;
};

Multigraph graph_of(Family family, int n) {
  return family == Family::sierpinski ? build_sierpinski(n).graph : build_hanoi(n, false).graph;
}

std::string tag(Family family, int n) {
  return std::string(family == Family::sierpinski ? "Gamma_" : "Sigma_") + std::to_string(n);
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
  Rational r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

// Runs one criterion, prints its line and returns whether it passed.
bool criterion(int number, const std::string& title, double budget_seconds, const std::function<void(Failures&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Failures failures;
  try {
    body(failures);
  } catch (const std::exception& e) {
    failures.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0) {
    std::ostringstream msg;
    msg << "took " << seconds << " s, budget " << budget_seconds << " s";
    failures.expect(seconds < budget_seconds, msg.str());
  }
  const bool ok = failures.empty();
  std::printf("%s  criterion %d: %s  (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), seconds,
              ok ? "" : "  -- ", failures.joined().c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240613);
  int failed = 0;
  auto record = [&](bool ok) { failed += ok ? 0 : 1; };

  record(criterion(1, "recursion totals equal both brute-force Tutte engines", 5.0, [&](Failures& f) {
    for (Family family : kFamilies) {
      for (int n = 1; n <= 2; ++n) {
        const BiPoly total = reduced_triple(family, n).total();
        const Multigraph g = graph_of(family, n);
        f.expect(total == oracle::tutte_subset_expansion(g), tag(family, n) + " subset expansion");
        f.expect(total == oracle::tutte_deletion_contraction(g), tag(family, n) + " deletion-contraction");
      }
    }
    const Multigraph i2 = build_contracted(2).graph;
    f.expect(contracted_tutte(2) == oracle::tutte_subset_expansion(i2), "I_2 subset expansion");
    f.expect(contracted_tutte(2) == oracle::tutte_deletion_contraction(i2), "I_2 deletion-contraction");
  }));

  record(criterion(2, "complexity equals matrix-tree (n <= 4) and closed forms (n <= 8)", 10.0, [&](Failures& f) {
    for (Family family : kFamilies) {
      for (int n = 1; n <= 4; ++n) {
        f.expect(complexity(family, n) == oracle::spanning_tree_count(graph_of(family, n)), tag(family, n) + " matrix-tree");
      }
      for (const PointTriple& p : point_series(family, 8, 1, 1)) {
        const ClosedFormSpanning cf = closed_form_spanning(family, p.level);
        f.expect(p.total() == cf.complexity, tag(family, p.level) + " closed-form complexity");
        f.expect(p.n == cf.n11, tag(family, p.level) + " closed-form N(1,1)");
        f.expect(p.m == cf.m11, tag(family, p.level) + " closed-form M(1,1)");
      }
    }
    for (int n = 2; n <= 4; ++n) {
      const BigInt kirchhoff = oracle::spanning_tree_count(build_contracted(n).graph);
      f.expect(contracted_tutte_at(n, 1, 1) == kirchhoff, "I_" + std::to_string(n) + " matrix-tree");
    }
  }));

  record(criterion(3, "level-2 specialization counts equal exhaustive oracles", 5.0, [&](Failures& f) {
    const Multigraph g2 = graph_of(Family::sierpinski, 2);
    const Multigraph s2 = graph_of(Family::hanoi, 2);
    f.expect(connected_spanning_subgraphs(Family::sierpinski, 2) == 160, "Gamma_2 connected = 160");
    f.expect(oracle::count_connected_spanning_subgraphs(g2) == 160, "Gamma_2 connected oracle");
    f.expect(connected_spanning_subgraphs(Family::hanoi, 2) == 352, "Sigma_2 connected = 352");
    f.expect(oracle::count_connected_spanning_subgraphs(s2) == 352, "Sigma_2 connected oracle");
    f.expect(spanning_forests(Family::sierpinski, 2) == 279, "Gamma_2 forests = 279");
    f.expect(oracle::count_spanning_forests(g2) == 279, "Gamma_2 forests oracle");
    f.expect(spanning_forests(Family::hanoi, 2) == oracle::count_spanning_forests(s2), "Sigma_2 forests oracle");
    f.expect(acyclic_orientations(Family::sierpinski, 2) == 162, "Gamma_2 acyclic = 162");
    f.expect(oracle::count_acyclic_orientations(g2) == 162, "Gamma_2 acyclic oracle");
    f.expect(acyclic_orientations(Family::hanoi, 2) == oracle::count_acyclic_orientations(s2), "Sigma_2 acyclic oracle");
    f.expect(chromatic_at(Family::sierpinski, 2, 3) == 6, "Gamma_2 3-colourings = 6");
    f.expect(oracle::count_proper_colorings(g2, 3) == 6, "Gamma_2 3-colourings oracle");
    f.expect(chromatic_at(Family::hanoi, 2, 3) == oracle::count_proper_colorings(s2, 3), "Sigma_2 3-colourings oracle");
  }));

  record(criterion(4, "identity suite for n <= 6 and divisibility for n <= 3", 0.0, [&](Failures& f) {
    for (Family family : kFamilies) {
      for (const PointTriple& p : point_series(family, 6, 2, 2)) {
        f.expect(p.total() == pow_ui(2, edge_count(family, p.level)), tag(family, p.level) + " T(2,2) = 2^|E|");
      }
      for (int n = 2; n <= 6; ++n) {
        f.expect(acyclic_orientations(family, n) == acyclic_orientations_aggregate(family, n),
                 tag(family, n) + " aggregate acyclic orientations");
      }
      for (int n = 1; n <= 3; ++n) {
        const TutteTriple t = undivided_triple(family, n);
        bool divisible = true;
        try {
          divide_exact_x_minus_1(t.t1, 1);
          divide_exact_x_minus_1(t.t0, 2);
        } catch (const Error&) {
          divisible = false;
        }
        f.expect(divisible, tag(family, n) + " (x-1) | t1 and (x-1)^2 | t0");
        f.expect(t.total() == reduced_triple(family, n).total(), tag(family, n) + " undivided equals reduced");
      }
    }
    for (int n = 1; n <= 6; ++n) {
      const ThreeColorCheck c = unique_three_colorability_check(n);
      const long s = n % 2 == 1 ? 1 : -1;
      f.expect(c.values.p2 == 2 * s && c.values.p1 == -3 * s && c.values.p0 == 9 * s,
               tag(Family::sierpinski, n) + " P-values at 3");
      f.expect(c.chi3 == 6, tag(Family::sierpinski, n) + " chi(3) = 6");
    }
  }));

  record(criterion(5, "join identity, symbolic n = 1, 2 and 50 random points at n = 3", 60.0, [&](Failures& f) {
    f.expect(join_identity_residual(1).is_zero(), "n = 1 symbolic");
    f.expect(join_identity_residual(2).is_zero(), "n = 2 symbolic");
    for (int i = 0; i < 50; ++i) {
      const Rational x0 = random_rational(rng, -5, 5, 50);
      const Rational y0 = random_rational(rng, -5, 5, 50);
      f.expect(join_identity_residual_at(3, x0, y0) == 0, "n = 3 at (" + to_string(x0) + ", " + to_string(y0) + ")");
    }
  }));

  record(criterion(6, "reliability polynomials and grid bounds", 0.0, [&](Failures& f) {
    const UniPoly p = UniPoly::variable();
    f.expect(reliability_polynomial(Family::sierpinski, 1) == UniPoly(3) * p.pow(2) - UniPoly(2) * p.pow(3),
             "Gamma_1 = 3p^2 - 2p^3");
    for (Family family : kFamilies) {
      f.expect(reliability_polynomial(family, 2) == oracle::reliability_exact(graph_of(family, 2)),
               tag(family, 2) + " subset oracle");
      for (int n = 1; n <= 4; ++n) {
        const UniPoly r = reliability_polynomial(family, n);
        f.expect(r.eval(0) == 0 && r.eval(1) == 1, tag(family, n) + " R(0) = 0, R(1) = 1");
        Rational previous = 0;
        bool bounded = true, monotone = true;
        for (int k = 0; k <= 1000; ++k) {
          const Rational value = r.eval(Rational(k, 1000));
          bounded = bounded && value >= 0 && value <= 1;
          monotone = monotone && value >= previous;
          previous = value;
        }
        f.expect(bounded, tag(family, n) + " 0 <= R <= 1 on the grid");
        f.expect(monotone, tag(family, n) + " R nondecreasing on the grid");
      }
    }
  }));

  record(criterion(7, "Ising partition functions, product formulas and hyperbola recursions", 0.0, [&](Failures& f) {
    for (Family family : kFamilies) {
      f.expect(ising_partition(family, 2) == oracle::ising_partition_exact(graph_of(family, 2)),
               tag(family, 2) + " spin enumeration");
    }
    for (int n = 1; n <= 5; ++n) {
      const UniPoly z = n <= 4 ? ising_partition(Family::hanoi, n) : UniPoly();
      for (int i = 0; i < 10; ++i) {
        const Rational t = 1 + random_rational(rng, 0, 3, 40) + Rational(1, 41);
        const Rational product = ising_product_formula_exact(n, t);
        const Rational tutte = n <= 4 ? z.eval(t) : ising_value_at(Family::hanoi, n, t);
        f.expect(product == tutte, tag(Family::hanoi, n) + " psi product at t = " + to_string(t));
      }
    }
    const HighFloat tolerance("1e-30");
    for (int n = 1; n <= 5; ++n) {
      for (const Rational& t : {Rational(2), Rational(3, 2), Rational(11, 7)}) {
        const HighFloat exact = to_high(ising_value_at(Family::sierpinski, n, t));
        const HighFloat product = ising_product_formula(Family::sierpinski, n, to_high(t));
        f.expect(abs(product - exact) / exact < tolerance,
                 tag(Family::sierpinski, n) + " phi product at t = " + to_string(t));
      }
    }
    for (Family family : kFamilies) {
      for (int n = 1; n <= 3; ++n) {
        const HyperbolaPair r = hyperbola_residual(family, n);
        f.expect(r.a.is_zero() && r.b.is_zero(), tag(family, n) + " A/B recursion to level " + std::to_string(n + 1));
      }
    }
  }));

  record(criterion(8, "growth constants at n = 10 within 1e-3", 0.0, [&](Failures& f) {
    for (Family family : kFamilies) {
      const auto start = std::chrono::steady_clock::now();
      const GrowthSeries s = growth_constant_series(family, 10);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const HighFloat gap = abs(s.entries.back().log_complexity_over_v - growth_constant_limit(family));
      f.expect(gap < HighFloat("1e-3"), tag(family, 10) + " gap " + to_string(gap, 6));
      f.expect(seconds < 1.0, tag(family, 10) + " point mode under 1 s");
    }
  }));

  record(criterion(9, "performance: point mode to level 12, symbolic to level 5", 0.0, [&](Failures& f) {
    using Clock = std::chrono::steady_clock;
    auto start = Clock::now();
    for (Family family : kFamilies) {
      for (int i = 0; i < 3; ++i) {
        const Rational x0 = random_rational(rng, -4, 4, 30);
        const Rational y0 = random_rational(rng, -4, 4, 30);
        eval_triple_at_point(family, 12, x0, y0);
      }
    }
    const double point_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    f.expect(point_seconds < 10.0, "point mode level 12 took " + std::to_string(point_seconds) + " s");
    for (Family family : kFamilies) {
      clear_triple_cache();
      start = Clock::now();
      const BiPoly total = reduced_triple(family, 5).total();
      const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
      f.expect(seconds < 120.0, tag(family, 5) + " symbolic took " + std::to_string(seconds) + " s");
      f.expect(total.eval(2, 2) == pow_ui(2, edge_count(family, 5)), tag(family, 5) + " symbolic T(2,2)");
      f.expect(total.eval(1, 1) == closed_form_complexity(family, 5), tag(family, 5) + " symbolic T(1,1)");
    }
  }));

  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
