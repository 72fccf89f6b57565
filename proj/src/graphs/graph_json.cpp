#include "tutte_ss/graphs/graph_json.hpp"

namespace tutte_ss {

Json to_json(const BuiltGraph& g) {
  Json out;
  out["n"] = g.level;
  out["family"] = std::string(to_string(g.family));
  Json vertices = Json::array();
  const auto& labels = g.graph.vertex_labels();
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v) {
    vertices.push_back(labels ? (*labels)[v] : std::to_string(v));
  }
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  const auto& edge_labels = g.graph.edge_labels();
  for (std::size_t i = 0; i < g.graph.edge_count(); ++i) {
    const Edge& e = g.graph.edge(i);
    Json row = Json::array({e.u, e.v});
    if (edge_labels) {
      row.push_back(std::string(1, static_cast<char>((*edge_labels)[i])));
    } else {
      row.push_back(nullptr);
    }
    edges.push_back(std::move(row));
  }
  out["edges"] = std::move(edges);
  out["corners"] = Json::array({g.corners.up, g.corners.left, g.corners.right});
  return out;
}

}  // namespace tutte_ss
