#include "tutte_ss/graphs/multigraph.hpp"

#include "tutte_ss/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tutte_ss {

std::size_t Multigraph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  }
  if (edge_labels_) throw Error(ErrorKind::InvalidArgument, "labelled graph needs a label per edge");
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

std::size_t Multigraph::add_edge(VertexId u, VertexId v, Generator label) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  }
  if (!edge_labels_) {
    if (!edges_.empty()) throw Error(ErrorKind::InvalidArgument, "cannot mix labelled and unlabelled edges");
    edge_labels_.emplace();
  }
  edges_.push_back({u, v});
  edge_labels_->push_back(label);
  return edges_.size() - 1;
}

void Multigraph::set_vertex_labels(std::vector<std::string> labels) {
  if (labels.size() != vertex_count_) throw Error(ErrorKind::InvalidArgument, "one label per vertex");
  vertex_labels_ = std::move(labels);
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::vector<std::uint32_t> Multigraph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

UnionFind::UnionFind(std::uint32_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId UnionFind::find(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool UnionFind::unite(VertexId u, VertexId v) {
  u = find(u);
  v = find(v);
  if (u == v) return false;
  if (rank_[u] < rank_[v]) std::swap(u, v);
  parent_[v] = u;
  if (rank_[u] == rank_[v]) ++rank_[u];
  --components_;
  return true;
}

Partition connected_components(const Multigraph& g, std::span<const std::size_t> active_edges) {
  UnionFind uf(g.vertex_count());
  for (std::size_t idx : active_edges) {
    const Edge& e = g.edge(idx);
    uf.unite(e.u, e.v);
  }
  Partition out;
  out.component_of.assign(g.vertex_count(), 0);
  std::vector<std::int64_t> index_of_root(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId r = uf.find(v);
    if (index_of_root[r] < 0) index_of_root[r] = out.count++;
    out.component_of[v] = static_cast<std::uint32_t>(index_of_root[r]);
  }
  return out;
}

Partition connected_components(const Multigraph& g) {
  std::vector<std::size_t> all(g.edge_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return connected_components(g, all);
}

bool is_connected(const Multigraph& g) { return connected_components(g).count <= 1; }

std::vector<std::pair<VertexId, VertexId>> canonical_form(const Multigraph& g) {
  if (g.vertex_count() > 9) throw Error(ErrorKind::TooLarge, "canonical_form is limited to 9 vertices");
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::vector<std::pair<VertexId, VertexId>> best;
  bool first = true;
  std::vector<std::pair<VertexId, VertexId>> current(g.edge_count());
  do {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      VertexId a = perm[g.edge(i).u];
      VertexId b = perm[g.edge(i).v];
      current[i] = {std::min(a, b), std::max(a, b)};
    }
    std::sort(current.begin(), current.end());
    if (first || current < best) {
      best = current;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic_small(const Multigraph& a, const Multigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

Multigraph one_point_join(const Multigraph& a, VertexId a_vertex, const Multigraph& b, VertexId b_vertex) {
  if (a_vertex >= a.vertex_count() || b_vertex >= b.vertex_count()) {
    throw Error(ErrorKind::InvalidArgument, "join vertex out of range");
  }
  Multigraph out(a.vertex_count() + b.vertex_count() - 1);
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  auto map_b = [&](VertexId v) -> VertexId {
    if (v == b_vertex) return a_vertex;
    return a.vertex_count() + (v < b_vertex ? v : v - 1);
  };
  for (const auto& e : b.edges()) out.add_edge(map_b(e.u), map_b(e.v));
  return out;
}

}  // namespace tutte_ss
