#pragma once

// Brute-force and classical computations on explicit multigraphs. These
// certify the recursion engine at small levels and must not share code
// paths with it beyond the exact number types.

#include "tutte_ss/exactmath/bipoly.hpp"
#include "tutte_ss/exactmath/unipoly.hpp"
#include "tutte_ss/graphs/multigraph.hpp"

#include <cstdint>

namespace tutte_ss::oracle {

struct Limits {
  std::size_t max_edges = 20;                        // subset / orientation enumeration
  std::uint64_t max_assignments = 50'000'000;        // colourings and spin states
};

// Sum over all 2^|E| spanning subgraphs of (x-1)^(r(G)-r(A)) (y-1)^(n(A)).
// Throws TooManyEdges, DisconnectedInput.
BiPoly tutte_subset_expansion(const Multigraph& g, const Limits& limits = {});

enum class EdgePolicy { lowest_index, highest_index };

// Loops and bridges are peeled first; otherwise the policy picks the edge
// for T(G) = T(G \ e) + T(G / e). Throws TooManyEdges.
BiPoly tutte_deletion_contraction(const Multigraph& g, EdgePolicy policy = EdgePolicy::lowest_index,
                                  const Limits& limits = {});

// Kirchhoff: determinant of the reduced Laplacian by fraction-free
// (Bareiss) elimination. Loops are ignored. Throws DisconnectedInput.
BigInt spanning_tree_count(const Multigraph& g);

BigInt count_connected_spanning_subgraphs(const Multigraph& g, const Limits& limits = {});
BigInt count_spanning_forests(const Multigraph& g, const Limits& limits = {});
// Zero when g has a loop.
BigInt count_acyclic_orientations(const Multigraph& g, const Limits& limits = {});
// Throws TooLarge when lambda^|V| exceeds limits.max_assignments.
BigInt count_proper_colorings(const Multigraph& g, unsigned lambda, const Limits& limits = {});

// Sum over connected spanning A of p^|A| (1-p)^(|E|-|A|), expanded in p.
UniPoly reliability_exact(const Multigraph& g, const Limits& limits = {});

// Sum over spin states of t^(sum over edges sigma_u sigma_v), a Laurent
// polynomial in t = e^(beta J). Throws TooLarge when 2^|V| exceeds limits.
UniPoly ising_partition_exact(const Multigraph& g, const Limits& limits = {});

}  // namespace tutte_ss::oracle
