#include "tutte_ss/errors.hpp"
#include "tutte_ss/graphs/builders.hpp"
#include "tutte_ss/oracle/oracle.hpp"

#include <doctest.h>

using namespace tutte_ss;

namespace {

Multigraph cycle(std::uint32_t n) {
  Multigraph g(n);
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("small graphs with textbook Tutte polynomials") {
  // C_4: x^3 + x^2 + x + y.
  const BiPoly c4 = BiPoly::monomial(1, 3, 0) + BiPoly::monomial(1, 2, 0) + BiPoly::x() + BiPoly::y();
  CHECK(oracle::tutte_subset_expansion(cycle(4)) == c4);
  CHECK(oracle::tutte_deletion_contraction(cycle(4)) == c4);
  // Two parallel edges: x + y; a loop alone: y.
  Multigraph digon(2);
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  CHECK(oracle::tutte_subset_expansion(digon) == BiPoly::x() + BiPoly::y());
  Multigraph loop(1);
  loop.add_edge(0, 0);
  CHECK(oracle::tutte_deletion_contraction(loop) == BiPoly::y());
}

TEST_CASE("both Tutte engines agree on the family graphs") {
  for (int n = 1; n <= 2; ++n) {
    for (const Multigraph& g : {build_sierpinski(n).graph, build_hanoi(n).graph}) {
      const BiPoly a = oracle::tutte_subset_expansion(g);
      CHECK(a == oracle::tutte_deletion_contraction(g, oracle::EdgePolicy::lowest_index));
      CHECK(a == oracle::tutte_deletion_contraction(g, oracle::EdgePolicy::highest_index));
    }
  }
  const Multigraph i2 = build_contracted(2).graph;
  CHECK(oracle::tutte_subset_expansion(i2) == oracle::tutte_deletion_contraction(i2));
}

TEST_CASE("Tutte oracles refuse oversized or disconnected inputs") {
  try {
    oracle::tutte_subset_expansion(build_sierpinski(3).graph);
    FAIL("expected TooManyEdges");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyEdges);
  }
  Multigraph two(2);
  CHECK_THROWS_AS(oracle::tutte_subset_expansion(two), Error);
  CHECK_THROWS_AS(oracle::spanning_tree_count(two), Error);
}

TEST_CASE("counting oracles") {
  const Multigraph g2 = build_sierpinski(2).graph;
  CHECK(oracle::spanning_tree_count(g2) == 54);
  CHECK(oracle::count_connected_spanning_subgraphs(g2) == 160);
  CHECK(oracle::count_spanning_forests(g2) == 279);
  CHECK(oracle::count_acyclic_orientations(g2) == 162);
  CHECK(oracle::count_proper_colorings(g2, 3) == 6);
  CHECK(oracle::count_proper_colorings(g2, 4) == 192);
  const Multigraph s2 = build_hanoi(2).graph;
  CHECK(oracle::spanning_tree_count(s2) == 135);
  CHECK(oracle::count_proper_colorings(s2, 3) == 66);
  CHECK(oracle::count_proper_colorings(s2, 4) == 5856);
  CHECK(oracle::spanning_tree_count(cycle(7)) == 7);
  Multigraph looped = cycle(3);
  looped.add_edge(1, 1);
  CHECK(oracle::count_acyclic_orientations(looped) == 0);
  CHECK(oracle::spanning_tree_count(looped) == 3);
}

TEST_CASE("reliability and Ising oracles") {
  const UniPoly p = UniPoly::variable();
  // Triangle: 3p^2 - 2p^3.
  CHECK(oracle::reliability_exact(cycle(3)) == UniPoly(3) * p.pow(2) - UniPoly(2) * p.pow(3));
  const UniPoly z = oracle::ising_partition_exact(cycle(3));
  CHECK(z == UniPoly::monomial(2, 3) + UniPoly::monomial(6, -1));
  const UniPoly s2 = oracle::ising_partition_exact(build_hanoi(2).graph);
  CHECK(s2.eval(1) == 512);
  CHECK(s2.coeff(12) == 2);
  CHECK(s2.coeff(-6) == 28);
}
