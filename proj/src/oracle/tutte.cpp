#include "tutte_ss/errors.hpp"
#include "tutte_ss/oracle/oracle.hpp"
#include "subsets.hpp"

#include <algorithm>

namespace tutte_ss::oracle {

namespace detail {

SubsetTable subset_table(const Multigraph& g, const Limits& limits) {
  const std::size_t e = g.edge_count();
  if (e > limits.max_edges || e >= 63) {
    throw Error(ErrorKind::TooManyEdges, std::to_string(e) + " edges, oracle cap is " + std::to_string(limits.max_edges));
  }
  const std::uint32_t v = g.vertex_count();
  SubsetTable table;
  table.vertices = v;
  table.edges = e;
  table.count.assign(static_cast<std::size_t>(v) + 1, std::vector<std::uint64_t>(e + 1, 0));

  const std::uint64_t subsets = std::uint64_t{1} << e;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    UnionFind uf(v);
    std::size_t size = 0;
    for (std::size_t i = 0; i < e; ++i) {
      if ((mask >> i) & 1U) {
        ++size;
        uf.unite(g.edge(i).u, g.edge(i).v);
      }
    }
    ++table.count[uf.components()][size];
  }
  return table;
}

}  // namespace detail

BiPoly tutte_subset_expansion(const Multigraph& g, const Limits& limits) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "subset expansion needs a connected graph");
  const auto table = detail::subset_table(g, limits);
  const std::int64_t v = table.vertices;

  // Collect integer multiplicities per (rank deficit, nullity), then expand
  // (x-1)^a (y-1)^b once per pair.
  BiPoly total;
  const BiPoly xm1 = BiPoly::x() - BiPoly(1);
  const BiPoly ym1 = BiPoly::y() - BiPoly(1);
  for (std::int64_t k = 1; k <= v; ++k) {
    for (std::size_t size = 0; size <= table.edges; ++size) {
      std::uint64_t c = table.count[static_cast<std::size_t>(k)][size];
      if (c == 0) continue;
      const auto rank_deficit = static_cast<unsigned>(k - 1);  // r(G) - r(A) with k(G) = 1
      const auto nullity = static_cast<unsigned>(static_cast<std::int64_t>(size) - v + k);
      total += xm1.pow(rank_deficit) * ym1.pow(nullity) * BiPoly(BigInt(static_cast<unsigned long>(c)));
    }
  }
  return total;
}

namespace {

struct Minor {
  std::uint32_t vertices;
  std::vector<Edge> edges;
};

bool is_bridge(const Minor& g, std::size_t index) {
  UnionFind uf(g.vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != index) uf.unite(g.edges[i].u, g.edges[i].v);
  }
  return uf.find(g.edges[index].u) != uf.find(g.edges[index].v);
}

BiPoly deletion_contraction(Minor g, EdgePolicy policy) {
  std::uint32_t loops = 0;
  std::erase_if(g.edges, [&](const Edge& e) {
    if (e.is_loop()) {
      ++loops;
      return true;
    }
    return false;
  });

  std::vector<bool> bridge(g.edges.size());
  std::uint32_t bridges = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    bridge[i] = is_bridge(g, i);
    bridges += bridge[i] ? 1 : 0;
  }
  if (bridges > 0) {
    // Deleting a bridge leaves every other edge's bridge status unchanged.
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!bridge[i]) kept.push_back(g.edges[i]);
    }
    g.edges = std::move(kept);
  }

  BiPoly factor = BiPoly::monomial(1, bridges, loops);
  if (g.edges.empty()) return factor;

  const std::size_t pick = policy == EdgePolicy::lowest_index ? 0 : g.edges.size() - 1;
  const Edge e = g.edges[pick];

  Minor deleted{g.vertices, g.edges};
  deleted.edges.erase(deleted.edges.begin() + static_cast<std::ptrdiff_t>(pick));

  Minor contracted{g.vertices, {}};
  contracted.edges.reserve(g.edges.size() - 1);
  const VertexId keep = std::min(e.u, e.v);
  const VertexId gone = std::max(e.u, e.v);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == pick) continue;
    Edge f = g.edges[i];
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
    contracted.edges.push_back(f);
  }

  return factor * (deletion_contraction(std::move(deleted), policy) +
                   deletion_contraction(std::move(contracted), policy));
}

}  // namespace

BiPoly tutte_deletion_contraction(const Multigraph& g, EdgePolicy policy, const Limits& limits) {
  if (g.edge_count() > limits.max_edges) {
    throw Error(ErrorKind::TooManyEdges,
                std::to_string(g.edge_count()) + " edges, oracle cap is " + std::to_string(limits.max_edges));
  }
  return deletion_contraction({g.vertex_count(), g.edges()}, policy);
}

}  // namespace tutte_ss::oracle
