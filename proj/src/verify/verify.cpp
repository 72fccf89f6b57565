#include "tutte_ss/verify/verify.hpp"

#include "tutte_ss/errors.hpp"
#include "tutte_ss/evaluations/counts.hpp"
#include "tutte_ss/evaluations/hyperbola.hpp"
#include "tutte_ss/evaluations/ising.hpp"
#include "tutte_ss/evaluations/polynomials.hpp"
#include "tutte_ss/graphs/builders.hpp"
#include "tutte_ss/oracle/oracle.hpp"
#include "tutte_ss/recursion/engine.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace tutte_ss {

namespace {

constexpr Family kFamilies[] = {Family::sierpinski, Family::hanoi};

// Per-check level ceilings.
constexpr int kOracleTutteLevel = 2;
constexpr int kMatrixTreeLevel = 5;
constexpr int kClosedFormLevel = 8;
constexpr int kPointIdentityLevel = 10;
constexpr int kSymbolicLevel = 3;
constexpr int kJoinPointLevel = 5;
constexpr int kProductFormulaLevel = 5;

Multigraph graph_of(Family family, int n) {
  return family == Family::sierpinski ? build_sierpinski(n).graph : build_hanoi(n, false).graph;
}

std::string label(Family family, int n) { return std::string(to_string(family)) + " level " + std::to_string(n); }

class Runner {
 public:
  explicit Runner(std::vector<VerificationCheck>& out) : out_(out) {}

  // body returns an empty string on success and a reason otherwise.
  void run(std::string name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationCheck check;
    check.name = std::move(name);
    try {
      check.detail = body();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = std::string("exception: ") + e.what();
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(check));
  }

 private:
  std::vector<VerificationCheck>& out_;
};

Rational random_rational(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo * 97, hi * 97);
  std::uniform_int_distribution<long> den(1, 97);
  const long numerator = num(rng);
  Rational r(numerator, den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<VerificationCheck> run_verification(const VerificationOptions& options) {
  if (options.max_level < 1) throw Error(ErrorKind::LevelOutOfRange, "max level must be >= 1");
  std::vector<VerificationCheck> checks;
  Runner runner(checks);
  std::mt19937_64 rng(options.seed);
  const int top = options.max_level;
  RecursionOptions recursion;
  recursion.perturb = options.perturb;

  for (Family family : kFamilies) {
    for (int n = 1; n <= std::min(top, kOracleTutteLevel); ++n) {
      runner.run("tutte polynomial vs subset expansion and deletion-contraction, " + label(family, n), [&] {
        const BiPoly recursion_total = reduced_triple(family, n, recursion).total();
        const Multigraph g = graph_of(family, n);
        if (recursion_total != oracle::tutte_subset_expansion(g)) return std::string("subset expansion differs");
        if (recursion_total != oracle::tutte_deletion_contraction(g)) return std::string("deletion-contraction differs");
        return std::string();
      });
    }
  }
  if (top >= 2) {
    runner.run("contracted graph I_2 vs subset expansion", [&] {
      const Multigraph g = build_contracted(2).graph;
      return contracted_tutte(2) == oracle::tutte_subset_expansion(g) ? std::string() : std::string("differs");
    });
  }

  for (Family family : kFamilies) {
    for (int n = 1; n <= std::min(top, kMatrixTreeLevel); ++n) {
      runner.run("complexity vs matrix-tree, " + label(family, n), [&] {
        const Rational tau = eval_triple_at_point(family, n, 1, 1, options.perturb).total();
        const BigInt kirchhoff = oracle::spanning_tree_count(graph_of(family, n));
        return tau == kirchhoff ? std::string() : "recursion " + to_string(tau) + " vs " + to_string(kirchhoff);
      });
    }
    runner.run("complexity and N, M at (1,1) vs closed forms, " + std::string(to_string(family)) + " levels 1.." +
                   std::to_string(std::min(top, kClosedFormLevel)),
               [&] {
                 const auto series = point_series(family, std::min(top, kClosedFormLevel), 1, 1, options.perturb);
                 for (const PointTriple& p : series) {
                   const ClosedFormSpanning cf = closed_form_spanning(family, p.level);
                   if (p.total() != cf.complexity || p.n != cf.n11 || p.m != cf.m11) {
                     return "mismatch at level " + std::to_string(p.level);
                   }
                 }
                 return std::string();
               });
  }

  for (Family family : kFamilies) {
    const int levels = std::min(top, kPointIdentityLevel);
    runner.run("T(2,2) = 2^|E|, " + std::string(to_string(family)) + " levels 1.." + std::to_string(levels), [&] {
      for (const PointTriple& p : point_series(family, levels, 2, 2, options.perturb)) {
        if (p.total() != pow_ui(2, edge_count(family, p.level))) return "fails at level " + std::to_string(p.level);
      }
      return std::string();
    });
    if (levels >= 2) {
      runner.run("acyclic orientation aggregate identity, " + std::string(to_string(family)) + " levels 2.." +
                     std::to_string(levels),
                 [&] {
                   for (int n = 2; n <= levels; ++n) {
                     if (acyclic_orientations(family, n) != acyclic_orientations_aggregate(family, n)) {
                       return "fails at level " + std::to_string(n);
                     }
                   }
                   return std::string();
                 });
    }
  }
  runner.run("unique 3-colourability of the Sierpinski graphs, levels 1.." +
                 std::to_string(std::min(top, kPointIdentityLevel)),
             [&] {
               for (int n = 1; n <= std::min(top, kPointIdentityLevel); ++n) {
                 if (!unique_three_colorability_check(n).ok) return "fails at level " + std::to_string(n);
               }
               return std::string();
             });

  for (Family family : kFamilies) {
    for (int n = 1; n <= std::min(top, kSymbolicLevel); ++n) {
      runner.run("reduced triple vs undivided recursion, " + label(family, n), [&] {
        const TutteTriple reduced = reduced_triple(family, n, recursion).expand();
        const TutteTriple full = undivided_triple(family, n);
        return reduced.t2 == full.t2 && reduced.t1 == full.t1 && reduced.t0 == full.t0 ? std::string()
                                                                                        : std::string("differs");
      });
      runner.run("chromatic polynomial, direct vs P-recursion, " + label(family, n), [&] {
        return chromatic_polynomial(family, n) == chromatic_polynomial_p_recursion(family, n) ? std::string()
                                                                                               : std::string("differs");
      });
    }
    for (int n = 1; n <= std::min(top, 2); ++n) {
      runner.run("chromatic values at 3 and 4 vs colouring count, " + label(family, n), [&] {
        const Multigraph g = graph_of(family, n);
        const UniPoly chi = chromatic_polynomial(family, n);
        for (unsigned lambda : {3U, 4U}) {
          if (chi.eval(lambda) != oracle::count_proper_colorings(g, lambda)) {
            return "differs at lambda " + std::to_string(lambda);
          }
        }
        return std::string();
      });
      runner.run("reliability polynomial vs subset oracle, " + label(family, n), [&] {
        return reliability_polynomial(family, n) == oracle::reliability_exact(graph_of(family, n)) ? std::string()
                                                                                                   : std::string("differs");
      });
      runner.run("Ising partition function vs spin enumeration, " + label(family, n), [&] {
        return ising_partition(family, n) == oracle::ising_partition_exact(graph_of(family, n)) ? std::string()
                                                                                               : std::string("differs");
      });
    }
    for (int n = 1; n < std::min(top, kSymbolicLevel); ++n) {
      runner.run("hyperbola A/B recursion, " + label(family, n) + " to " + std::to_string(n + 1), [&] {
        const HyperbolaPair r = hyperbola_residual(family, n);
        return r.a.is_zero() && r.b.is_zero() ? std::string() : std::string("nonzero residual");
      });
    }
  }

  for (int n = 1; n <= std::min(top, 2); ++n) {
    runner.run("join identity, symbolic, level " + std::to_string(n), [&] {
      return join_identity_residual(n).is_zero() ? std::string() : std::string("nonzero residual");
    });
  }
  for (int n = 1; n <= std::min(top, kJoinPointLevel); ++n) {
    runner.run("join identity at 10 random points, level " + std::to_string(n), [&] {
      for (int i = 0; i < 10; ++i) {
        const Rational x0 = random_rational(rng, -3, 3);
        const Rational y0 = random_rational(rng, -3, 3);
        if (join_identity_residual_at(n, x0, y0) != 0) return "nonzero at (" + to_string(x0) + ", " + to_string(y0) + ")";
      }
      return std::string();
    });
  }
  for (int n = 1; n <= std::min(top, kProductFormulaLevel); ++n) {
    runner.run("Hanoi Ising product formula at 3 random t, level " + std::to_string(n), [&] {
      for (int i = 0; i < 3; ++i) {
        const Rational t = 1 + abs(random_rational(rng, 0, 2)) + Rational(1, 7);
        if (ising_product_formula_exact(n, t) != ising_value_at(Family::hanoi, n, t)) return "differs at t = " + to_string(t);
      }
      return std::string();
    });
  }
  return checks;
}

bool all_passed(const std::vector<VerificationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

}  // namespace tutte_ss
