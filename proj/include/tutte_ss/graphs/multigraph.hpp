#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tutte_ss {

using VertexId = std::uint32_t;

enum class Generator : char { a = 'a', b = 'b', c = 'c' };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph; loops and parallel edges allowed. Edge order is
// part of the value (builders emit a canonical order).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::uint32_t vertex_count) : vertex_count_(vertex_count) {}

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::size_t add_edge(VertexId u, VertexId v);
  std::size_t add_edge(VertexId u, VertexId v, Generator label);

  const std::optional<std::vector<std::string>>& vertex_labels() const { return vertex_labels_; }
  const std::optional<std::vector<Generator>>& edge_labels() const { return edge_labels_; }
  void set_vertex_labels(std::vector<std::string> labels);

  std::size_t loop_count() const;
  // Loops count twice, as usual.
  std::vector<std::uint32_t> degrees() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::string>> vertex_labels_;
  std::optional<std::vector<Generator>> edge_labels_;
};

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n);

  VertexId find(VertexId v);
  // Returns false when u and v were already joined.
  bool unite(VertexId u, VertexId v);
  std::uint32_t components() const { return components_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::uint32_t components_;
};

struct Partition {
  std::vector<std::uint32_t> component_of;  // dense component index per vertex
  std::uint32_t count = 0;
};

// Components of the spanning subgraph made of the active edges only.
Partition connected_components(const Multigraph& g, std::span<const std::size_t> active_edges);
Partition connected_components(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Smallest sorted edge list (as vertex pairs) over all vertex relabelings.
// Only for tiny graphs (vertex_count <= 9); used for isomorphism checks.
std::vector<std::pair<VertexId, VertexId>> canonical_form(const Multigraph& g);
bool isomorphic_small(const Multigraph& a, const Multigraph& b);

// One-point join: b's vertex b_vertex is identified with a's vertex a_vertex.
Multigraph one_point_join(const Multigraph& a, VertexId a_vertex, const Multigraph& b, VertexId b_vertex);

}  // namespace tutte_ss
