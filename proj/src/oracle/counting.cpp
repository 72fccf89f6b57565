#include "tutte_ss/errors.hpp"
#include "tutte_ss/oracle/oracle.hpp"
#include "subsets.hpp"

#include <map>
#include <string>

namespace tutte_ss::oracle {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

BigInt count_connected_spanning_subgraphs(const Multigraph& g, const Limits& limits) {
  const auto table = detail::subset_table(g, limits);
  BigInt total = 0;
  if (table.vertices == 0) return total;
  for (std::uint64_t c : table.count[1]) total += big(c);
  return total;
}

BigInt count_spanning_forests(const Multigraph& g, const Limits& limits) {
  // A is acyclic iff |A| = |V| - k(A).
  const auto table = detail::subset_table(g, limits);
  BigInt total = 0;
  for (std::uint32_t k = 1; k <= table.vertices; ++k) {
    std::size_t size = table.vertices - k;
    if (size <= table.edges) total += big(table.count[k][size]);
  }
  return total;
}

UniPoly reliability_exact(const Multigraph& g, const Limits& limits) {
  const auto table = detail::subset_table(g, limits);
  UniPoly total;
  const UniPoly p = UniPoly::variable();
  const UniPoly q = UniPoly(1) - p;
  for (std::size_t size = 0; size <= table.edges; ++size) {
    std::uint64_t c = table.vertices == 0 ? 0 : table.count[1][size];
    if (c == 0) continue;
    total += p.pow(static_cast<unsigned>(size)) * q.pow(static_cast<unsigned>(table.edges - size)) *
             Rational(big(c));
  }
  return total;
}

BigInt count_acyclic_orientations(const Multigraph& g, const Limits& limits) {
  const std::size_t e = g.edge_count();
  if (e > limits.max_edges || e >= 63) {
    throw Error(ErrorKind::TooManyEdges, std::to_string(e) + " edges, oracle cap is " + std::to_string(limits.max_edges));
  }
  if (g.loop_count() > 0) return 0;
  const std::uint32_t v = g.vertex_count();
  std::uint64_t acyclic = 0;
  std::vector<std::uint32_t> indegree(v);
  std::vector<std::vector<VertexId>> out(v);
  std::vector<VertexId> ready;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    std::fill(indegree.begin(), indegree.end(), 0);
    for (auto& row : out) row.clear();
    for (std::size_t i = 0; i < e; ++i) {
      VertexId from = g.edge(i).u;
      VertexId to = g.edge(i).v;
      if ((mask >> i) & 1U) std::swap(from, to);
      out[from].push_back(to);
      ++indegree[to];
    }
    // Kahn: acyclic iff every vertex gets removed.
    ready.clear();
    for (VertexId x = 0; x < v; ++x) {
      if (indegree[x] == 0) ready.push_back(x);
    }
    std::uint32_t removed = 0;
    while (!ready.empty()) {
      VertexId x = ready.back();
      ready.pop_back();
      ++removed;
      for (VertexId y : out[x]) {
        if (--indegree[y] == 0) ready.push_back(y);
      }
    }
    if (removed == v) ++acyclic;
  }
  return big(acyclic);
}

BigInt count_proper_colorings(const Multigraph& g, unsigned lambda, const Limits& limits) {
  const std::uint32_t v = g.vertex_count();
  // lambda^|V| <= cap, checked without overflow.
  BigInt space = pow_ui(lambda, v);
  if (space > big(limits.max_assignments)) {
    throw Error(ErrorKind::TooLarge, std::to_string(lambda) + "^" + std::to_string(v) + " colourings exceed the cap");
  }
  if (g.loop_count() > 0) return 0;
  if (v == 0) return 1;

  // Neighbours with smaller id, so an assignment in id order only checks
  // already-coloured vertices. Exhaustive with pruning.
  std::vector<std::vector<VertexId>> earlier(v);
  for (const auto& e : g.edges()) {
    VertexId lo = std::min(e.u, e.v);
    VertexId hi = std::max(e.u, e.v);
    earlier[hi].push_back(lo);
  }
  std::vector<unsigned> colour(v, 0);
  std::uint64_t count = 0;
  auto assign = [&](auto& self, VertexId x) -> void {
    if (x == v) {
      ++count;
      return;
    }
    for (unsigned c = 0; c < lambda; ++c) {
      bool ok = true;
      for (VertexId y : earlier[x]) {
        if (colour[y] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[x] = c;
      self(self, x + 1);
    }
  };
  assign(assign, 0);
  return big(count);
}

UniPoly ising_partition_exact(const Multigraph& g, const Limits& limits) {
  const std::uint32_t v = g.vertex_count();
  if (v >= 63 || (std::uint64_t{1} << v) > limits.max_assignments) {
    throw Error(ErrorKind::TooLarge, "2^" + std::to_string(v) + " spin states exceed the cap");
  }
  std::map<std::int64_t, std::uint64_t> histogram;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << v); ++state) {
    std::int64_t energy = 0;
    for (const auto& e : g.edges()) {
      bool su = (state >> e.u) & 1U;
      bool sv = (state >> e.v) & 1U;
      energy += su == sv ? 1 : -1;
    }
    ++histogram[energy];
  }
  UniPoly::Terms terms;
  for (const auto& [exponent, count] : histogram) terms[exponent] = Rational(big(count));
  return UniPoly(std::move(terms));
}

}  // namespace tutte_ss::oracle
